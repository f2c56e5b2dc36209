#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdn/integer.hpp"
#include "qdn/quadring.hpp"
#include "qdn/units.hpp"

namespace qdn {

/// Trace test: trace^2 divisible by the norm. ZeroElement for 0.
bool is_dnumber(const QuadInt& x);
/// Same test on raw doubled coordinates; NotAlgebraicInteger when (p, q)
/// is not in O_N.
bool is_dnumber(const QuadField& field, const Integer& p, const Integer& q);
/// Minimal polynomial criterion: (a_i)^n divisible by (a_n)^i.
bool is_dnumber_minpoly(const QuadInt& x);
/// x^2 / norm(x) is a unit of O_N.
bool is_dnumber_unit_quotient(const QuadInt& x);

/// 1 when x is an integer times a unit, else 2. NotADNumber otherwise.
int dnumber_order(const QuadInt& x);

/// t + 2 = s1^2 kappa1 and t - 2 = s2^2 kappa2 with kappa_i squarefree.
struct Kappas {
    Integer kappa1;
    Integer kappa2;
    Integer s1;
    Integer s2;
};

/// NotApplicable when the fundamental unit has norm -1.
Kappas kappas(const QuadField& field);

enum class GeneratorCase { NormMinusOne, KappaProductEqN, NKappa1EqKappa2, NKappa2EqKappa1, Else };
std::string_view case_name(GeneratorCase c);

/// Index i of delta_i: sqrt(N), sqrt(kappa1 eps), sqrt(kappa2 eps).
enum class GeneratorId { SqrtN = 0, SqrtKappa1Eps = 1, SqrtKappa2Eps = 2 };

struct Generator {
    GeneratorId id;
    QuadInt value;
    /// |norm(value)|: N, kappa1 or kappa2.
    Integer norm_abs;
};

struct GeneratorSet {
    QuadField field;
    GeneratorCase case_tag;
    std::vector<Generator> generators;
    std::optional<Integer> kappa1;
    std::optional<Integer> kappa2;

    bool has(GeneratorId id) const;
    const Generator& get(GeneratorId id) const;
};

/// Memoized per N.
GeneratorSet generator_set(const QuadField& field);

using Delta = std::array<int, 3>;

/// The delta triples used by canonical_factor, in a fixed order. In the
/// three-generator case any two generators multiply to an integer times a
/// unit times the third, so at most one delta is set there.
std::vector<Delta> allowed_deltas(const GeneratorSet& gens);

/// ell * eps^m * sqrt(N)^d0 * sqrt(kappa1 eps)^d1 * sqrt(kappa2 eps)^d2.
struct CanonicalFactorization {
    QuadField field;
    Integer ell;
    long m;
    Delta delta;
};

CanonicalFactorization canonical_factor(const QuadInt& x);
QuadInt evaluate(const CanonicalFactorization& f);
/// e.g. "2·ε^1·√5" or "3·√(7ε)".
std::string render(const CanonicalFactorization& f);

enum class DivisibilityStep { Accepted, EllFilter, GeneratorFilter, ExactDivision };
std::string_view step_name(DivisibilityStep s);

struct DivisibilityResult {
    bool divides;
    /// Accepted when divides, otherwise the first check that failed.
    DivisibilityStep step;
    std::optional<QuadInt> quotient;
};

/// Does y divide x in O_N.
DivisibilityResult dnumber_divides(const QuadInt& y, const QuadInt& x);

enum class ComplexCase { Generic, Gaussian, Eisenstein };

struct ComplexClassification {
    QuadField field;
    ComplexCase kind;
    std::string description;

    /// Membership in the d-numbers by the explicit description.
    bool member(const QuadInt& x) const;
};

/// N < 0 only.
ComplexClassification complex_classify(const QuadField& field);

/// Whether sqrt(c * eps^j) lies in Q(sqrt(N)) for squarefree c > 0 and j of
/// the given parity.
bool sqrt_class(const Integer& c, int j_parity, const QuadField& field);

} // namespace qdn
