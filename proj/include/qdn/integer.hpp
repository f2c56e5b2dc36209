#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Effort limits for integer factorization. Trial division runs up to
/// `trial_limit`; each Pollard-rho attempt is capped at `rho_iterations`
/// steps, with `rho_attempts` different polynomials tried per cofactor.
struct FactorBudget {
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t rho_iterations = 2'000'000;
    unsigned rho_attempts = 8;
};

/// Budget used when a call passes none. Process-wide; the CLI sets it from
/// --budget before dispatching.
FactorBudget default_budget();
void set_default_budget(const FactorBudget& budget);

/// n = square_part^2 * squarefree_part with squarefree_part squarefree.
struct SqfDecomposition {
    Integer input;
    Integer square_part;
    Integer squarefree_part;
};

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
bool is_probable_prime(const Integer& n);

/// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
/// Throws FactorizationLimit when the budget runs out.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n, const FactorBudget& budget = default_budget());

SqfDecomposition squarefree_decompose(const Integer& n, const FactorBudget& budget = default_budget());
Integer squarefree_part(const Integer& n, const FactorBudget& budget = default_budget());

/// Exact squarefreeness by trial division; intended for field discriminants.
bool is_squarefree(std::int64_t n);

/// Positive divisors of n >= 1, ascending.
std::vector<Integer> divisors(const Integer& n, const FactorBudget& budget = default_budget());

std::string to_string(const Integer& n);
Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

} // namespace qdn
