#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <mpfr.h>

#include "qdn/dnumbers.hpp"
#include "qdn/integer.hpp"
#include "qdn/quadring.hpp"
#include "qdn/tables.hpp"
#include "qdn/units.hpp"

namespace qdn::testing {

inline std::string fixture_path(const std::string& name) { return std::string(QDN_FIXTURES_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Non-comment lines split on tabs.
inline std::vector<std::vector<std::string>> fixture_rows(const std::string& name)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(read_fixture(name));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cells;
        std::istringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, '\t')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

/// Field of a display string: the radicand after √, or 2 for a bare integer.
inline QuadInt parse_any_field(const std::string& text)
{
    const std::size_t root = text.find("√");
    std::int64_t n = 2;
    if (root != std::string::npos) {
        std::string digits;
        for (std::size_t i = root + std::string("√").size(); i < text.size() && std::isdigit(text[i]); ++i) {
            digits += text[i];
        }
        n = std::stoll(digits);
    }
    return tables::parse_display(QuadField(n), text);
}

inline std::vector<std::int64_t> squarefree_range(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (n != 0 && n != 1 && is_squarefree(n < 0 ? -n : n)) out.push_back(n);
    }
    return out;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240607);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// A random element of O_N with coordinates |a|, |b| <= span in the integral basis.
inline QuadInt random_element(const QuadField& field, long span)
{
    const Integer a = uniform(-span, span);
    const Integer b = uniform(-span, span);
    if (field.omega_kind() == OmegaKind::HalfOnePlusSqrtN) return QuadInt(field, 2 * a + b, b);
    return QuadInt(field, 2 * a, 2 * b);
}

/// Independent product over Q: (a1 + b1 r)(a2 + b2 r) with r^2 = N.
inline std::pair<Rational, Rational> rational_product(const QuadInt& x, const QuadInt& y)
{
    const Integer two = 2;
    const Rational a1(x.p(), two), b1(x.q(), two), a2(y.p(), two), b2(y.q(), two);
    const Rational n(x.field().n_integer());
    Rational a = a1 * a2 + n * b1 * b2;
    Rational b = a1 * b2 + a2 * b1;
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

/// x - y evaluated with `bits` of precision; for sanity checks only.
inline int float_sign_of_difference(const QuadInt& x, const QuadInt& y, mpfr_prec_t bits, bool& separated)
{
    mpfr_t a, b, r;
    mpfr_inits2(bits, a, b, r, static_cast<mpfr_ptr>(nullptr));
    auto eval = [&](mpfr_t out, const QuadInt& v) {
        mpfr_set_si(r, static_cast<long>(v.field().n()), MPFR_RNDN);
        mpfr_sqrt(r, r, MPFR_RNDN);
        mpfr_mul_z(r, r, v.q().get_mpz_t(), MPFR_RNDN);
        mpfr_add_z(out, r, v.p().get_mpz_t(), MPFR_RNDN);
        mpfr_div_ui(out, out, 2, MPFR_RNDN);
    };
    eval(a, x);
    eval(b, y);
    mpfr_sub(r, a, b, MPFR_RNDN);
    const int s = mpfr_sgn(r);
    mpfr_abs(r, r, MPFR_RNDN);
    separated = mpfr_cmp_d(r, 0x1p-100) > 0;
    mpfr_clears(a, b, r, static_cast<mpfr_ptr>(nullptr));
    return s;
}

/// A random d-number ell * eps^m * (generator product), with its parameters.
struct BuiltDNumber {
    QuadInt value;
    Integer ell;
    long m;
    Delta delta;
};

inline BuiltDNumber random_dnumber(const QuadField& field, long ell_span, long m_span)
{
    const GeneratorSet gens = generator_set(field);
    const auto deltas = allowed_deltas(gens);
    const Delta delta = deltas[static_cast<std::size_t>(uniform(0, static_cast<long>(deltas.size()) - 1))];
    Integer ell = uniform(1, ell_span);
    if (uniform(0, 1)) ell = -ell;
    const long m = uniform(-m_span, m_span);
    return {evaluate({field, ell, m, delta}), ell, m, delta};
}

} // namespace qdn::testing
