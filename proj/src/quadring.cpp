#include "qdn/quadring.hpp"

#include <cmath>
#include <sstream>

#include <mpfr.h>

#include "qdn/error.hpp"

namespace qdn {

namespace {

OmegaKind omega_for(std::int64_t n)
{
    // N mod 4 for negative N as well: -3 = 1 mod 4.
    const std::int64_t r = ((n % 4) + 4) % 4;
    return r == 1 ? OmegaKind::HalfOnePlusSqrtN : OmegaKind::SqrtN;
}

void require_same_field(const QuadInt& x, const QuadInt& y)
{
    if (!(x.field() == y.field())) {
        raise(ErrorKind::FieldMismatch, "elements of Q(√" + std::to_string(x.field().n()) + ") and Q(√" +
                                            std::to_string(y.field().n()) + ")");
    }
}

int sign_int(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

// Sign of p + q*sqrt(n) for n > 0 non-square.
int sign_of(const Integer& p, const Integer& q, const Integer& n)
{
    const int sp = sign_int(p);
    const int sq = sign_int(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    return (p * p > n * q * q) ? sp : sq;
}

std::string half_string(const Integer& twice)
{
    if (mpz_even_p(twice.get_mpz_t())) return to_string(Integer(twice / 2));
    return to_string(twice) + "/2";
}

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

// Real embedding at the given precision, round to nearest.
void evaluate(const QuadInt& x, MpfrValue& out, mpfr_prec_t prec)
{
    if (!x.field().is_real()) raise(ErrorKind::InvalidArgument, "real embedding of an imaginary quadratic");
    MpfrValue root(prec);
    mpfr_set_si(root.get(), static_cast<long>(x.field().n()), MPFR_RNDN);
    mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
    mpfr_mul_z(root.get(), root.get(), x.q().get_mpz_t(), MPFR_RNDN);
    mpfr_add_z(out.get(), root.get(), x.p().get_mpz_t(), MPFR_RNDN);
    mpfr_div_ui(out.get(), out.get(), 2, MPFR_RNDN);
}

mpfr_prec_t working_precision(const QuadInt& x)
{
    const std::size_t bits = std::max(mpz_sizeinbase(x.p().get_mpz_t(), 2), mpz_sizeinbase(x.q().get_mpz_t(), 2));
    return static_cast<mpfr_prec_t>(2 * bits + 128);
}

} // namespace

QuadField::QuadField(std::int64_t n) : n_(n), omega_(omega_for(n))
{
    if (n == 0 || n == 1 || !is_squarefree(n)) {
        raise(ErrorKind::InvalidArgument, "N = " + std::to_string(n) + " is not a squarefree integer other than 0, 1");
    }
}

bool is_integral(const QuadField& field, const Integer& p, const Integer& q)
{
    const bool p_even = mpz_even_p(p.get_mpz_t());
    const bool q_even = mpz_even_p(q.get_mpz_t());
    if (field.omega_kind() == OmegaKind::HalfOnePlusSqrtN) return p_even == q_even;
    return p_even && q_even;
}

QuadInt::QuadInt(const QuadField& field, Integer p, Integer q) : field_(field), p_(std::move(p)), q_(std::move(q))
{
    if (!is_integral(field_, p_, q_)) {
        raise(ErrorKind::ParityError, "(" + to_string(p_) + " + " + to_string(q_) + "√" + std::to_string(field_.n()) +
                                          ")/2 is not in the ring of integers");
    }
}

QuadInt QuadInt::from_integer(const QuadField& field, const Integer& n) { return QuadInt(field, 2 * n, 0); }

QuadInt QuadInt::sqrt_n(const QuadField& field) { return QuadInt(field, 0, 2); }

QuadInt QuadInt::from_ab(const QuadField& field, const Integer& a, const Integer& b)
{
    return QuadInt(field, 2 * a, 2 * b);
}

Integer QuadInt::rational_value() const
{
    if (q_ != 0 || !mpz_even_p(p_.get_mpz_t())) raise(ErrorKind::InvalidArgument, render(*this) + " is not rational");
    return p_ / 2;
}

QuadInt QuadInt::conjugate() const { return QuadInt(field_, p_, -q_); }

Integer QuadInt::norm() const
{
    Integer value = p_ * p_ - field_.n_integer() * q_ * q_;
    // Divisible by 4 by the parity invariant.
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), 4);
    return value;
}

int QuadInt::sign() const
{
    if (!field_.is_real()) raise(ErrorKind::InvalidArgument, "sign of an element of an imaginary field");
    return sign_of(p_, q_, field_.n_integer());
}

QuadInt QuadInt::pow(unsigned long exponent) const
{
    QuadInt result = from_integer(field_, 1);
    QuadInt base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

QuadInt QuadInt::operator-() const { return QuadInt(field_, -p_, -q_); }

QuadInt& QuadInt::operator+=(const QuadInt& rhs)
{
    require_same_field(*this, rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& rhs)
{
    require_same_field(*this, rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& rhs)
{
    require_same_field(*this, rhs);
    // (p1 + q1 r)(p2 + q2 r)/4 = ((p1 p2 + N q1 q2) + (p1 q2 + p2 q1) r)/4
    Integer p = p_ * rhs.p_ + field_.n_integer() * q_ * rhs.q_;
    Integer q = p_ * rhs.q_ + q_ * rhs.p_;
    mpz_divexact_ui(p.get_mpz_t(), p.get_mpz_t(), 2);
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), 2);
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QuadInt& QuadInt::operator*=(const Integer& rhs)
{
    p_ *= rhs;
    q_ *= rhs;
    return *this;
}

QuadInt arith(const QuadInt& x, const QuadInt& y, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    }
    raise(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

std::strong_ordering compare(const QuadInt& x, const QuadInt& y)
{
    require_same_field(x, y);
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare(const QuadInt& x, const Integer& y)
{
    return compare(x, QuadInt::from_integer(x.field(), y));
}

std::strong_ordering compare(const QuadInt& x, const Rational& y)
{
    // den > 0 for a canonical mpq, so x <=> num/den iff den*x <=> num.
    return compare(x * Integer(y.get_den()), Integer(y.get_num()));
}

std::strong_ordering compare_real(const QuadInt& x, const QuadInt& y)
{
    if (x.field() == y.field()) return compare(x, y);
    if (!x.field().is_real() || !y.field().is_real()) {
        raise(ErrorKind::InvalidArgument, "comparison of elements of an imaginary field");
    }
    // 2(x - y) = A + B sqrt(m) + C sqrt(n). With X = A + B sqrt(m) and
    // Y = -C sqrt(n) of equal sign s, sign(X - Y) = s * sign(X^2 - Y^2) and
    // X^2 - Y^2 = (A^2 + m B^2 - n C^2) + 2AB sqrt(m).
    const Integer a = x.p() - y.p();
    const Integer& b = x.q();
    const Integer c = -y.q();
    const Integer m = x.field().n_integer();
    const Integer n = y.field().n_integer();
    const int sx = sign_of(a, b, m);
    const int sy = -sign_int(c);
    int s;
    if (sx != sy) {
        s = sx > sy ? 1 : -1;
    } else if (sx == 0) {
        s = 0;
    } else {
        s = sx * sign_of(a * a + m * b * b - n * c * c, 2 * a * b, m);
    }
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::optional<QuadInt> try_divide(const QuadInt& x, const QuadInt& y)
{
    require_same_field(x, y);
    if (y.is_zero()) raise(ErrorKind::DivByZero, "division by zero");
    // x / y = x * conj(y) / norm(y).
    const QuadInt numerator = x * y.conjugate();
    const Integer n = y.norm();
    if (!mpz_divisible_p(numerator.p().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(numerator.q().get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
    }
    Integer p = numerator.p() / n;
    Integer q = numerator.q() / n;
    if (!is_integral(x.field(), p, q)) return std::nullopt;
    return QuadInt(x.field(), std::move(p), std::move(q));
}

QuadInt exact_divide(const QuadInt& x, const QuadInt& y)
{
    auto out = try_divide(x, y);
    if (!out) raise(ErrorKind::NotDivisible, render(x) + " / " + render(y) + " is not in O_N");
    return *out;
}

QuadInt exact_divide(const QuadInt& x, const Integer& y) { return exact_divide(x, QuadInt::from_integer(x.field(), y)); }

std::string render(const QuadInt& x)
{
    const std::string root = "√" + std::to_string(x.field().n());
    if (x.is_zero()) return "0";

    std::string out;
    if (x.p() != 0) out = half_string(x.p());
    if (x.q() == 0) return out;

    const Integer abs_q = abs(x.q());
    if (x.q() < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    if (abs_q != 2) out += half_string(abs_q);
    return out + root;
}

std::string approx(const QuadInt& x, int digits)
{
    const mpfr_prec_t prec = working_precision(x);
    MpfrValue value(prec);
    evaluate(x, value, prec);
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Rg", digits, value.get());
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

double to_double(const QuadInt& x)
{
    const mpfr_prec_t prec = working_precision(x);
    MpfrValue value(prec);
    evaluate(x, value, prec);
    return mpfr_get_d(value.get(), MPFR_RNDN);
}

double log_abs(const QuadInt& x)
{
    const mpfr_prec_t prec = working_precision(x);
    MpfrValue value(prec);
    evaluate(x, value, prec);
    mpfr_abs(value.get(), value.get(), MPFR_RNDN);
    mpfr_log(value.get(), value.get(), MPFR_RNDN);
    return mpfr_get_d(value.get(), MPFR_RNDN);
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << render(x); }

} // namespace qdn
