#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qdn/dnumbers.hpp"
#include "qdn/integer.hpp"
#include "qdn/quadring.hpp"

namespace qdn {

/// [m] = (eps^m - eps^-m) / (eps - eps^-1).
struct QuantumInt {
    QuadField field;
    long m;
    QuadInt value;
};

/// By the recurrence [m+1] = (eps + eps^-1)[m] - [m-1].
QuantumInt quantum_int(const QuadField& field, long m);
/// By exact division of the defining quotient; used to cross-check.
QuadInt quantum_int_direct(const QuadField& field, long m);

/// d_int + sum_j coeffs[j] eps^j = target = ell * eps^m.
struct Decomposition {
    QuadField field;
    CanonicalFactorization target;
    Integer d_int;
    std::map<long, Integer> coeffs;
};

/// True when both the coordinate identity and [m] d_int = sum l_j [j - m]
/// hold exactly.
bool verify_decomposition(const Decomposition& d);

/// All solutions with d_int drawn from the divisors of divisor_constraint
/// (default: the divisors of ell). NotInDPlus unless ell * eps^m is.
std::vector<Decomposition> decompose_global_dim(const QuadField& field, const Integer& ell, long m,
                                                const std::optional<Integer>& divisor_constraint = std::nullopt);

struct CandidateScan {
    std::size_t scanned = 0;
    std::vector<Decomposition> solutions;
};

/// Checks every (d_int, l_1, ..., l_J) with d_int in dint_pool and l_j in
/// ranges[j - 1] (inclusive) against the coordinate identity.
CandidateScan candidate_scan(const QuadField& field, const Integer& ell, long m, const std::vector<Integer>& dint_pool,
                             const std::vector<std::pair<long, long>>& ranges);

/// One simple object with dimension^2 = c * eps^j.
struct SimplePart {
    Integer c;
    long j;
    bool operator==(const SimplePart&) const = default;
};

struct SimpleDimProfile {
    Decomposition decomposition;
    std::vector<SimplePart> parts;
};

/// Splits each l_j into parts c whose sqrt(c eps^j) lies in the field. With
/// the filter, also requires target / (c eps^j) to be an algebraic integer.
std::vector<SimpleDimProfile> refine_simple_dims(const Decomposition& d, bool apply_modular_filter);

struct NearGroupDims {
    QuadField field;
    QuadInt rho;
    QuadInt rho_dim_sq;
    QuadInt cat_dim;
    bool unit_check;
};

/// Near-group with k = n|G|, n >= 1. NotApplicable if the dimension is
/// rational.
NearGroupDims near_group_dim(const Integer& group_order, const Integer& n);
/// The k = 0 case: 2|G|.
Integer tambara_yamagami_dim(const Integer& group_order);

struct HaagerupIzumiDims {
    QuadField field;
    QuadInt rho_dim;
    QuadInt cat_dim;
    bool rho_unit_norm_minus_one;
};

HaagerupIzumiDims haagerup_izumi_dim(const Integer& group_order);

using Dimension = std::variant<Integer, QuadInt>;
std::string render(const Dimension& d);

struct GeneralizedNearGroupDims {
    Dimension rho;
    Dimension cat_dim;
    bool rho_is_dnumber;
};

/// Rejected when |G_rho| does not divide K^2.
GeneralizedNearGroupDims generalized_near_group_check(const Integer& group_order, const Integer& stabilizer_order,
                                                      const Integer& k_sum);

/// Orders n of the simple objects other than the unit; each has dimension
/// 2cos(pi/n).
struct KroneckerCandidate {
    std::vector<int> orders;
};

/// Multisets of 4cos^2(pi/n) summing to target - 1 that also pass the
/// fusion-rule check d_X^2 - 1 in the N-span of the dimensions present.
/// PrecisionInsufficient when intervals cannot decide.
std::vector<KroneckerCandidate> kronecker_screen(const QuadInt& target, unsigned precision_bits = 128);

} // namespace qdn
