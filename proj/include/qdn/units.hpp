#pragma once

#include <optional>
#include <vector>

#include "qdn/integer.hpp"
#include "qdn/quadring.hpp"

namespace qdn {

enum class CFKind { SqrtN, Omega };

/// Continued fraction [a0; period, period, ...] of sqrt(N) or of
/// (1+sqrt(N))/2. The tail after a0 is purely periodic in both cases.
struct CFExpansion {
    CFKind value_kind;
    Integer a0;
    std::vector<Integer> period;
};

/// eps = (t + u sqrt(N))/2 > 1 generating the units modulo sign.
struct FundamentalUnit {
    QuadField field;
    Integer t;
    Integer u;
    int unit_norm;
    QuadInt value;
};

/// Omega requires N = 1 mod 4. InvalidArgument for N < 2.
CFExpansion cf_expand(const QuadField& field, CFKind kind);

/// Memoized per N; safe to call from several threads.
FundamentalUnit fundamental_unit(const QuadField& field);

bool negative_pell_solvable(const QuadField& field);

/// eps^m for any integer m; eps^-1 = norm(eps) * sigma(eps).
QuadInt unit_power(const FundamentalUnit& eps, long m);

struct PellWitness {
    Integer kappa;
    Integer n;
};

/// Least (kappa, n), kappa squarefree in [2, bound] and n in [1, bound],
/// with kappa n^2 - 4 a positive non-square and Q(sqrt(kappa(kappa n^2 - 4)))
/// equal to Q(sqrt(N)). Such a witness exists iff the unit has norm +1.
std::optional<PellWitness> pell_witness_search(const QuadField& field, const Integer& bound,
                                               const FactorBudget& budget = default_budget());

} // namespace qdn
