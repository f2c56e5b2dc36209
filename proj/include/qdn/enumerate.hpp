#pragma once

#include <string>
#include <vector>

#include "qdn/dnumbers.hpp"
#include "qdn/integer.hpp"
#include "qdn/quadring.hpp"

namespace qdn {

/// An element alpha of a real field with alpha >= sigma(alpha) >= 1.
struct DPlusElement {
    QuadInt value;
    CanonicalFactorization factorization;
    std::string approx;
    /// Rational integers belong to every field; enumerate_all reports them
    /// once, flagged here, instead of once per field.
    bool is_integer = false;
};

/// d-number with x >= sigma(x) >= 1, all comparisons exact.
bool in_dplus(const QuadInt& x);

enum class IntegerPolicy { Exclude, Include };

/// All elements of the field's set within [1, M], ascending.
std::vector<DPlusElement> enumerate_field(const QuadField& field, const Rational& m_bound,
                                          IntegerPolicy integers = IntegerPolicy::Exclude);

enum class NormFilter { Any, MinusOne, PlusOne };

struct EnumerateOptions {
    bool include_integers = true;
    NormFilter norm_filter = NormFilter::Any;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Union over squarefree 2 <= N <= (2M - 1)^2, ascending.
std::vector<DPlusElement> enumerate_all(const Rational& m_bound, const EnumerateOptions& options = {});

/// 8M(M+1)(2M-1)^2.
Integer cardinality_bound(const Integer& m_bound);

/// Necessary condition N + 2 sqrt(N) <= 4M - 1 for a norm -1 field to meet
/// [1, M], evaluated exactly.
bool norm_minus_one_field_admitted(std::int64_t n, const Rational& m_bound);

struct NormMinusOneBounds {
    /// ell * sqrt(N)^d0 >= eps^m
    bool ell_bound;
    /// alpha >= eps^(2m)
    bool alpha_bound;
};

/// NotApplicable when the unit has norm +1.
NormMinusOneBounds norm_minus_one_bounds(const QuadField& field, const DPlusElement& x);

/// eps^2: a lower bound for every irrational element of a norm -1 field.
/// NotApplicable when the unit has norm +1.
QuadInt irrational_lower_bound(const QuadField& field);

/// Exhaustive coordinate scan testing in_dplus directly; includes integers.
std::vector<QuadInt> brute_force_oracle(const QuadField& field, const Rational& m_bound);

/// N, p, q, ell, m, d0d1d2, decimal approximation, tab separated. Integers
/// report N as 1.
std::string to_tsv(const DPlusElement& x);

} // namespace qdn
