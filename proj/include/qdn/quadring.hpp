#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qdn/integer.hpp"

namespace qdn {

enum class OmegaKind { SqrtN, HalfOnePlusSqrtN };

/// The quadratic field Q(sqrt(N)) together with its ring of integers O_N.
/// N is squarefree, nonzero and different from 1; its sign selects real or
/// imaginary.
class QuadField {
public:
    explicit QuadField(std::int64_t n);

    std::int64_t n() const noexcept { return n_; }
    Integer n_integer() const { return Integer(static_cast<long>(n_)); }
    bool is_real() const noexcept { return n_ > 0; }
    OmegaKind omega_kind() const noexcept { return omega_; }

    friend bool operator==(const QuadField& a, const QuadField& b) noexcept { return a.n_ == b.n_; }

private:
    std::int64_t n_;
    OmegaKind omega_;
};

/// Parity test for doubled coordinates: (p + q sqrt(N))/2 lies in O_N.
bool is_integral(const QuadField& field, const Integer& p, const Integer& q);

/// An element (p + q sqrt(N))/2 of O_N, stored in doubled coordinates so the
/// half-integral basis for N = 1 mod 4 needs no special casing.
class QuadInt {
public:
    /// Throws ParityError when (p, q) does not describe an element of O_N.
    QuadInt(const QuadField& field, Integer p, Integer q);

    static QuadInt from_integer(const QuadField& field, const Integer& n);
    static QuadInt sqrt_n(const QuadField& field);
    /// a + b*sqrt(N) with integral a, b.
    static QuadInt from_ab(const QuadField& field, const Integer& a, const Integer& b);

    const QuadField& field() const noexcept { return field_; }
    const Integer& p() const noexcept { return p_; }
    const Integer& q() const noexcept { return q_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }
    /// The rational integer value; only valid when is_rational().
    Integer rational_value() const;

    QuadInt conjugate() const;
    Integer norm() const;
    Integer trace() const { return p_; }

    /// Sign of the real embedding with sqrt(N) > 0. Requires a real field.
    int sign() const;

    QuadInt pow(unsigned long exponent) const;

    QuadInt operator-() const;
    QuadInt& operator+=(const QuadInt& rhs);
    QuadInt& operator-=(const QuadInt& rhs);
    QuadInt& operator*=(const QuadInt& rhs);
    QuadInt& operator*=(const Integer& rhs);

    friend QuadInt operator+(QuadInt a, const QuadInt& b) { return a += b; }
    friend QuadInt operator-(QuadInt a, const QuadInt& b) { return a -= b; }
    friend QuadInt operator*(QuadInt a, const QuadInt& b) { return a *= b; }
    friend QuadInt operator*(QuadInt a, const Integer& b) { return a *= b; }
    friend QuadInt operator*(const Integer& b, QuadInt a) { return a *= b; }

    friend bool operator==(const QuadInt& a, const QuadInt& b)
    {
        return a.field_ == b.field_ && a.p_ == b.p_ && a.q_ == b.q_;
    }

private:
    QuadField field_;
    Integer p_;
    Integer q_;
};

enum class ArithOp { Add, Sub, Mul };

/// Ring operation with a field check; FieldMismatch when fields differ.
QuadInt arith(const QuadInt& x, const QuadInt& y, ArithOp op);

/// Exact comparison of real embeddings (sqrt(N) > 0). Never uses floating
/// point. FieldMismatch when fields differ; InvalidArgument for imaginary fields.
std::strong_ordering compare(const QuadInt& x, const QuadInt& y);
std::strong_ordering compare(const QuadInt& x, const Integer& y);
std::strong_ordering compare(const QuadInt& x, const Rational& y);

/// Exact comparison of real embeddings of elements of possibly different
/// real fields.
std::strong_ordering compare_real(const QuadInt& x, const QuadInt& y);

/// gamma with x = y * gamma in O_N, if one exists. DivByZero when y = 0.
std::optional<QuadInt> try_divide(const QuadInt& x, const QuadInt& y);
/// As try_divide, but NotDivisible when the quotient leaves O_N.
QuadInt exact_divide(const QuadInt& x, const QuadInt& y);
QuadInt exact_divide(const QuadInt& x, const Integer& y);

/// "a+b√N" with a, b integers or halves "x/2".
std::string render(const QuadInt& x);
/// Decimal approximation of the real embedding, for display only.
std::string approx(const QuadInt& x, int digits = 12);
/// Real embedding as a double; non-authoritative size estimate.
double to_double(const QuadInt& x);
/// Natural logarithm of a positive real embedding; non-authoritative.
double log_abs(const QuadInt& x);

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

} // namespace qdn
