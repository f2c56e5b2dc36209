#include <doctest.h>

#include "qdn/error.hpp"
#include "qdn/quadring.hpp"
#include "support.hpp"

using namespace qdn;
using qdn::testing::random_element;

namespace {

ErrorKind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InternalInconsistency;
}

QuadInt ab(std::int64_t n, long a, long b) { return QuadInt::from_ab(QuadField(n), a, b); }

Rational half(const Integer& v)
{
    Rational r(v, Integer(2));
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("field construction rejects non-squarefree and trivial N")
{
    for (std::int64_t n : {0, 1, 4, 12, -4, 18}) {
        CHECK(kind_of([&] { QuadField f(n); }) == ErrorKind::InvalidArgument);
    }
    CHECK(QuadField(5).omega_kind() == OmegaKind::HalfOnePlusSqrtN);
    CHECK(QuadField(-3).omega_kind() == OmegaKind::HalfOnePlusSqrtN);
    CHECK(QuadField(3).omega_kind() == OmegaKind::SqrtN);
    CHECK(QuadField(-1).omega_kind() == OmegaKind::SqrtN);
}

TEST_CASE("doubled coordinates and parity")
{
    const QuadField f5(5);
    const QuadInt phi(f5, 1, 1);
    CHECK(render(phi) == "1/2+1/2√5");
    CHECK(QuadInt(QuadField(2), 0, 0).is_zero());
    CHECK(kind_of([] { QuadInt(QuadField(3), 1, 1); }) == ErrorKind::ParityError);
    CHECK(kind_of([] { QuadInt(QuadField(5), 1, 2); }) == ErrorKind::ParityError);
    CHECK(is_integral(QuadField(-3), Integer(3), Integer(1)));
    CHECK_FALSE(is_integral(QuadField(-1), Integer(1), Integer(1)));
}

TEST_CASE("ring operations")
{
    CHECK(ab(3, 2, 1) * ab(3, 2, -1) == ab(3, 1, 0));
    const QuadField f5(5);
    CHECK(QuadInt(f5, 1, 1) * QuadInt(f5, 1, 1) == QuadInt(f5, 3, 1));
    CHECK(ab(6, 3, 1) * ab(6, 2, 1) == ab(6, 12, 5));
    CHECK(ab(3, 3, 1).conjugate() == ab(3, 3, -1));
    CHECK(ab(2, 7, 0).conjugate() == ab(2, 7, 0));
    CHECK(ab(2, 1, 1).conjugate() == ab(2, 1, -1));
    CHECK(ab(2, 1, 1) * ab(2, 1, -1) == ab(2, -1, 0));
    CHECK(kind_of([] { arith(ab(2, 1, 1), ab(3, 1, 1), ArithOp::Add); }) == ErrorKind::FieldMismatch);
    CHECK(ab(2, 1, 1).pow(0) == ab(2, 1, 0));
    CHECK(ab(2, 1, 1).pow(3) == ab(2, 7, 5));
}

TEST_CASE("norm and trace")
{
    CHECK(QuadInt(QuadField(13), 3, 1).norm() == -1);
    CHECK(QuadInt::sqrt_n(QuadField(6)).norm() == -6);
    CHECK(ab(7, 8, 3).norm() == 1);
    CHECK(ab(7, 8, 3).trace() == 16);
}

TEST_CASE("exact comparison")
{
    CHECK(compare(ab(3, 3, 1), Integer(5)) == std::strong_ordering::less);
    CHECK(compare(ab(3, 3, -1), Integer(1)) == std::strong_ordering::greater);
    const QuadInt eps5(QuadField(5), 1, 1);
    CHECK(compare(eps5, eps5) == std::strong_ordering::equal);
    CHECK(compare(ab(2, 0, 1), Rational(Integer(17), Integer(12))) == std::strong_ordering::less);
    CHECK(compare(ab(2, 0, 1), Rational(Integer(140), Integer(99))) == std::strong_ordering::greater);
    CHECK(kind_of([] { compare(ab(-1, 1, 1), Integer(0)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("comparison across fields")
{
    CHECK(compare_real(ab(2, 0, 1), ab(3, 0, 1)) == std::strong_ordering::less);
    CHECK(compare_real(ab(5, 2, 0), ab(3, 2, 0)) == std::strong_ordering::equal);
    // 1 + sqrt(2) = 2.4142..., (3 + sqrt(5))/2 = 2.6180...
    CHECK(compare_real(ab(2, 1, 1), QuadInt(QuadField(5), 3, 1)) == std::strong_ordering::less);
    CHECK(compare_real(ab(2, 3, 2), ab(10, 0, 3)) == std::strong_ordering::less);
    // 3 + sqrt(3) against (5 + sqrt(5))/2
    CHECK(compare_real(ab(3, 3, 1), QuadInt(QuadField(5), 5, 1)) == std::strong_ordering::greater);

    for (int i = 0; i < 2000; ++i) {
        const auto fields = qdn::testing::squarefree_range(2, 40);
        const QuadField fx(fields[static_cast<std::size_t>(qdn::testing::uniform(0, fields.size() - 1))]);
        const QuadField fy(fields[static_cast<std::size_t>(qdn::testing::uniform(0, fields.size() - 1))]);
        const QuadInt x = random_element(fx, 60);
        const QuadInt y = random_element(fy, 60);
        bool separated = false;
        const int s = qdn::testing::float_sign_of_difference(x, y, 256, separated);
        if (!separated) continue;
        const auto c = compare_real(x, y);
        CHECK((c < 0 ? -1 : c > 0 ? 1 : 0) == s);
    }
}

TEST_CASE("division")
{
    CHECK(exact_divide(ab(3, 3, 1), ab(3, 1, 1)) == ab(3, 0, 1));
    CHECK(kind_of([] { exact_divide(ab(3, 3, 1), Integer(2)); }) == ErrorKind::NotDivisible);
    const QuadInt x = ab(11, 4, -7);
    CHECK(exact_divide(x, ab(11, 1, 0)) == x);
    CHECK(kind_of([] { try_divide(ab(2, 1, 1), ab(2, 0, 0)); }) == ErrorKind::DivByZero);
    CHECK_FALSE(try_divide(ab(3, 1, 1), ab(3, 3, 1)).has_value());
    // Half-integral quotients stay in O_N when N = 1 mod 4.
    const QuadField f5(5);
    CHECK(exact_divide(QuadInt(f5, 5, 1), QuadInt(f5, 1, 1)) == QuadInt(f5, 0, 2));
}

TEST_CASE("rendering")
{
    CHECK(render(ab(2, 0, 1)) == "√2");
    CHECK(render(ab(2, 0, -1)) == "-√2");
    CHECK(render(ab(3, 3, 1)) == "3+√3");
    CHECK(render(ab(14, 7, 2)) == "7+2√14");
    CHECK(render(ab(2, 1, -3)) == "1-3√2");
    CHECK(render(ab(2, -4, 0)) == "-4");
    CHECK(render(QuadInt(QuadField(21), 7, 1)) == "7/2+1/2√21");
    CHECK(render(QuadInt(QuadField(-3), 3, -1)) == "3/2-1/2√-3");
    CHECK(approx(ab(3, 3, 1), 6) == "4.73205");
}

TEST_CASE("ring axioms against a rational oracle")
{
    for (std::int64_t n : qdn::testing::squarefree_range(-30, 97)) {
        const QuadField field(n);
        for (int i = 0; i < 40; ++i) {
            const QuadInt x = random_element(field, 1000);
            const QuadInt y = random_element(field, 1000);
            const QuadInt xy = x * y;
            const auto [a, b] = qdn::testing::rational_product(x, y);
            CHECK(half(xy.p()) == a);
            CHECK(half(xy.q()) == b);
            CHECK(xy.norm() == x.norm() * y.norm());
            CHECK((x + y).trace() == x.trace() + y.trace());
            const QuadInt xs = x * x.conjugate();
            CHECK(xs.is_rational());
            CHECK(xs.rational_value() == x.norm());
            if (!y.is_zero()) CHECK(exact_divide(xy, y) == x);
        }
    }
}
