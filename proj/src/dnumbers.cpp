#include "qdn/dnumbers.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "qdn/error.hpp"

namespace qdn {

namespace {

Integer odd_part(Integer v)
{
    if (v == 0) return v;
    mpz_remove(v.get_mpz_t(), v.get_mpz_t(), Integer(2).get_mpz_t());
    return v;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

// a = s^2 kappa with kappa squarefree, given a * b = N u^2 and gcd(a, b) | 4.
// An odd prime of a is in kappa iff it divides N, and its share of s is its
// share of u, so gcds recover both parts without factoring. The prime 2 is
// settled from the power of two left over.
std::pair<Integer, Integer> split_square(const Integer& a, const Integer& n, const Integer& u)
{
    const Integer kappa_odd = odd_part(gcd(a, n));
    const Integer s_odd = odd_part(gcd(a, u));
    const Integer base = s_odd * s_odd * kappa_odd;
    if (!divides(base, a)) raise(ErrorKind::InternalInconsistency, "kappa split of " + to_string(a));
    const Integer rest = a / base;
    const auto twos = mpz_scan1(rest.get_mpz_t(), 0);
    Integer power = 1;
    mpz_mul_2exp(power.get_mpz_t(), power.get_mpz_t(), twos);
    if (power != rest) raise(ErrorKind::InternalInconsistency, "kappa split of " + to_string(a));

    Integer kappa = kappa_odd * (twos % 2 ? 2 : 1);
    Integer s = s_odd;
    mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), twos / 2);
    if (s * s * kappa != a) raise(ErrorKind::InternalInconsistency, "kappa split of " + to_string(a));
    return {std::move(kappa), std::move(s)};
}

GeneratorSet compute_generators(const QuadField& field)
{
    const FundamentalUnit eps = fundamental_unit(field);
    const Integer n = field.n_integer();
    GeneratorSet out{field, GeneratorCase::NormMinusOne, {}, std::nullopt, std::nullopt};
    const Generator root{GeneratorId::SqrtN, QuadInt::sqrt_n(field), n};

    if (eps.unit_norm == -1) {
        out.generators.push_back(root);
        return out;
    }

    const Kappas k = kappas(field);
    out.kappa1 = k.kappa1;
    out.kappa2 = k.kappa2;
    const QuadInt one = QuadInt::from_integer(field, 1);
    // (1 + eps)^2 = (t + 2) eps and (eps - 1)^2 = (t - 2) eps.
    const Generator g1{GeneratorId::SqrtKappa1Eps, exact_divide(one + eps.value, k.s1), k.kappa1};
    const Generator g2{GeneratorId::SqrtKappa2Eps, exact_divide(eps.value - one, k.s2), k.kappa2};

    if (k.kappa1 * k.kappa2 == n) {
        out.case_tag = GeneratorCase::KappaProductEqN;
        out.generators = {g1, g2};
    } else if (n * k.kappa1 == k.kappa2) {
        out.case_tag = GeneratorCase::NKappa1EqKappa2;
        out.generators = {root, g1};
    } else if (n * k.kappa2 == k.kappa1) {
        out.case_tag = GeneratorCase::NKappa2EqKappa1;
        out.generators = {root, g2};
    } else {
        out.case_tag = GeneratorCase::Else;
        out.generators = {root, g1, g2};
    }
    return out;
}

std::map<std::int64_t, GeneratorSet>& generator_memo()
{
    static std::map<std::int64_t, GeneratorSet> memo;
    return memo;
}

std::shared_mutex& generator_memo_mutex()
{
    static std::shared_mutex mutex;
    return mutex;
}

void require_real(const QuadField& field)
{
    if (field.n() < 2) raise(ErrorKind::InvalidArgument, "a real quadratic field is required");
}

QuadInt generator_product(const GeneratorSet& gens, const Delta& delta)
{
    QuadInt out = QuadInt::from_integer(gens.field, 1);
    for (int i = 0; i < 3; ++i) {
        if (delta[i]) out *= gens.get(static_cast<GeneratorId>(i)).value;
    }
    return out;
}

Integer generator_norm(const GeneratorSet& gens, const Delta& delta)
{
    Integer out = 1;
    for (int i = 0; i < 3; ++i) {
        if (delta[i]) out *= gens.get(static_cast<GeneratorId>(i)).norm_abs;
    }
    return out;
}

int active_index(const Delta& delta)
{
    for (int i = 0; i < 3; ++i) {
        if (delta[i]) return i;
    }
    return -1;
}

} // namespace

bool is_dnumber(const QuadInt& x)
{
    if (x.is_zero()) raise(ErrorKind::ZeroElement, "0 is not a d-number");
    const Integer n = x.norm();
    const Integer p2 = x.p() * x.p();
    return divides(n, p2);
}

bool is_dnumber(const QuadField& field, const Integer& p, const Integer& q)
{
    if (!is_integral(field, p, q)) {
        raise(ErrorKind::NotAlgebraicInteger, "(" + to_string(p) + "+" + to_string(q) + "√" +
                                                  std::to_string(field.n()) + ")/2 is not in O_N");
    }
    return is_dnumber(QuadInt(field, p, q));
}

bool is_dnumber_minpoly(const QuadInt& x)
{
    if (x.is_zero()) raise(ErrorKind::ZeroElement, "0 is not a d-number");
    std::vector<Integer> a;
    if (x.is_rational()) {
        a = {Integer(-x.rational_value())};
    } else {
        a = {Integer(-x.trace()), x.norm()};
    }
    const auto n = static_cast<unsigned long>(a.size());
    const Integer& last = a.back();
    for (unsigned long i = 1; i <= n; ++i) {
        Integer lhs, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), a[i - 1].get_mpz_t(), n);
        mpz_pow_ui(rhs.get_mpz_t(), last.get_mpz_t(), i);
        if (!divides(rhs, lhs)) return false;
    }
    return true;
}

bool is_dnumber_unit_quotient(const QuadInt& x)
{
    if (x.is_zero()) raise(ErrorKind::ZeroElement, "0 is not a d-number");
    const auto quotient = try_divide(x * x, QuadInt::from_integer(x.field(), x.norm()));
    if (!quotient) return false;
    const Integer n = quotient->norm();
    return n == 1 || n == -1;
}

int dnumber_order(const QuadInt& x)
{
    if (!is_dnumber(x)) raise(ErrorKind::NotADNumber, render(x) + " is not a d-number");
    const Integer n = abs(x.norm());
    if (!is_perfect_square(n)) return 2;
    const auto unit = try_divide(x, QuadInt::from_integer(x.field(), isqrt(n)));
    if (!unit) return 2;
    const Integer un = unit->norm();
    return (un == 1 || un == -1) ? 1 : 2;
}

Kappas kappas(const QuadField& field)
{
    require_real(field);
    const FundamentalUnit eps = fundamental_unit(field);
    if (eps.unit_norm == -1) {
        raise(ErrorKind::NotApplicable, "the fundamental unit of Q(√" + std::to_string(field.n()) + ") has norm -1");
    }
    const Integer n = field.n_integer();
    auto [kappa1, s1] = split_square(Integer(eps.t + 2), n, eps.u);
    auto [kappa2, s2] = split_square(Integer(eps.t - 2), n, eps.u);
    return {std::move(kappa1), std::move(kappa2), std::move(s1), std::move(s2)};
}

std::string_view case_name(GeneratorCase c)
{
    switch (c) {
    case GeneratorCase::NormMinusOne: return "NormMinusOne";
    case GeneratorCase::KappaProductEqN: return "KappaProductEqN";
    case GeneratorCase::NKappa1EqKappa2: return "NKappa1EqKappa2";
    case GeneratorCase::NKappa2EqKappa1: return "NKappa2EqKappa1";
    case GeneratorCase::Else: return "Else";
    }
    return "Unknown";
}

bool GeneratorSet::has(GeneratorId id) const
{
    for (const auto& g : generators) {
        if (g.id == id) return true;
    }
    return false;
}

const Generator& GeneratorSet::get(GeneratorId id) const
{
    for (const auto& g : generators) {
        if (g.id == id) return g;
    }
    raise(ErrorKind::InvalidArgument, "generator absent for N = " + std::to_string(field.n()));
}

GeneratorSet generator_set(const QuadField& field)
{
    require_real(field);
    {
        std::shared_lock lock(generator_memo_mutex());
        auto it = generator_memo().find(field.n());
        if (it != generator_memo().end()) return it->second;
    }
    GeneratorSet gens = compute_generators(field);
    std::unique_lock lock(generator_memo_mutex());
    return generator_memo().try_emplace(field.n(), std::move(gens)).first->second;
}

std::vector<Delta> allowed_deltas(const GeneratorSet& gens)
{
    switch (gens.case_tag) {
    case GeneratorCase::NormMinusOne: return {{0, 0, 0}, {1, 0, 0}};
    case GeneratorCase::KappaProductEqN: return {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}};
    case GeneratorCase::NKappa1EqKappa2: return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    case GeneratorCase::NKappa2EqKappa1: return {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 0, 1}};
    case GeneratorCase::Else: return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    }
    return {};
}

CanonicalFactorization canonical_factor(const QuadInt& x)
{
    const QuadField& field = x.field();
    require_real(field);
    if (!is_dnumber(x)) raise(ErrorKind::NotADNumber, render(x) + " is not a d-number");

    const GeneratorSet gens = generator_set(field);
    const FundamentalUnit eps = fundamental_unit(field);
    const Integer norm_abs = abs(x.norm());

    // |norm(x)| = ell^2 * c with c squarefree, and the allowed products have
    // pairwise distinct squarefree norms, so at most one delta matches.
    for (const Delta& delta : allowed_deltas(gens)) {
        const Integer c = generator_norm(gens, delta);
        if (!divides(c, norm_abs)) continue;
        const Integer square = norm_abs / c;
        if (!is_perfect_square(square)) continue;

        Integer ell = isqrt(square);
        if (x.sign() < 0) ell = -ell;
        const auto unit = try_divide(x, generator_product(gens, delta) * ell);
        if (!unit) break;
        const Integer un = unit->norm();
        if (un != 1 && un != -1) break;

        const long estimate = std::lround(log_abs(*unit) / log_abs(eps.value));
        for (long shift : {0L, -1L, 1L, -2L, 2L}) {
            if (unit_power(eps, estimate + shift) == *unit) {
                CanonicalFactorization out{field, std::move(ell), estimate + shift, delta};
                if (!(evaluate(out) == x)) break;
                return out;
            }
        }
        break;
    }
    raise(ErrorKind::InternalInconsistency, "no canonical factorization found for " + render(x));
}

QuadInt evaluate(const CanonicalFactorization& f)
{
    const GeneratorSet gens = generator_set(f.field);
    return unit_power(fundamental_unit(f.field), f.m) * generator_product(gens, f.delta) * f.ell;
}

std::string render(const CanonicalFactorization& f)
{
    std::vector<std::string> factors;
    if (f.m == 1) {
        factors.push_back("ε");
    } else if (f.m != 0) {
        factors.push_back("ε^" + std::to_string(f.m));
    }
    if (f.delta[0]) factors.push_back("√" + std::to_string(f.field.n()));
    if (f.delta[1] || f.delta[2]) {
        const GeneratorSet gens = generator_set(f.field);
        if (f.delta[1]) factors.push_back("√(" + to_string(*gens.kappa1) + "ε)");
        if (f.delta[2]) factors.push_back("√(" + to_string(*gens.kappa2) + "ε)");
    }

    std::string out;
    if (factors.empty()) return to_string(f.ell);
    if (f.ell == -1) {
        out = "-";
    } else if (f.ell != 1) {
        out = to_string(f.ell) + "·";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "·";
        out += factors[i];
    }
    return out;
}

std::string_view step_name(DivisibilityStep s)
{
    switch (s) {
    case DivisibilityStep::Accepted: return "accepted";
    case DivisibilityStep::EllFilter: return "ell-filter";
    case DivisibilityStep::GeneratorFilter: return "generator-filter";
    case DivisibilityStep::ExactDivision: return "exact-division";
    }
    return "unknown";
}

DivisibilityResult dnumber_divides(const QuadInt& y, const QuadInt& x)
{
    if (!(x.field() == y.field())) raise(ErrorKind::FieldMismatch, "divisibility across different fields");
    if (!is_dnumber(y)) raise(ErrorKind::NotADNumber, render(y) + " is not a d-number");
    if (!is_dnumber(x)) raise(ErrorKind::NotADNumber, render(x) + " is not a d-number");

    const CanonicalFactorization fy = canonical_factor(y);
    const CanonicalFactorization fx = canonical_factor(x);
    if (!divides(fy.ell, fx.ell)) return {false, DivisibilityStep::EllFilter, std::nullopt};

    const GeneratorSet gens = generator_set(x.field());
    Integer needed = abs(fy.ell);
    Integer available = abs(fx.ell);
    if (gens.case_tag != GeneratorCase::Else) {
        for (int i = 0; i < 3; ++i) {
            if (fx.delta[i] - fy.delta[i] == -1) needed *= gens.get(static_cast<GeneratorId>(i)).norm_abs;
        }
    } else {
        // With three generators the exponent-wise argument does not apply:
        // G_i G_j = h eps^a G_k lets a divisor's generator be absorbed.
        const int i = active_index(fy.delta);
        const int j = active_index(fx.delta);
        if (i >= 0 && i != j) {
            needed *= gens.get(static_cast<GeneratorId>(i)).norm_abs;
            if (j >= 0) {
                const QuadInt product = gens.get(static_cast<GeneratorId>(i)).value *
                                        gens.get(static_cast<GeneratorId>(j)).value;
                available *= abs(canonical_factor(product).ell);
            }
        }
    }
    if (!divides(needed, available)) return {false, DivisibilityStep::GeneratorFilter, std::nullopt};

    auto quotient = try_divide(x, y);
    if (!quotient) return {false, DivisibilityStep::ExactDivision, std::nullopt};
    return {true, DivisibilityStep::Accepted, std::move(quotient)};
}

bool ComplexClassification::member(const QuadInt& x) const
{
    if (!(x.field() == field)) raise(ErrorKind::FieldMismatch, "membership across different fields");
    if (x.is_zero()) raise(ErrorKind::ZeroElement, "0 is not a d-number");
    const Integer& p = x.p();
    const Integer& q = x.q();
    const Integer ap = abs(p);
    const Integer aq = abs(q);
    switch (kind) {
    case ComplexCase::Generic: return q == 0 || p == 0;
    case ComplexCase::Gaussian: return q == 0 || p == 0 || ap == aq;
    case ComplexCase::Eisenstein: return q == 0 || p == 0 || ap == aq || ap == 3 * aq;
    }
    return false;
}

ComplexClassification complex_classify(const QuadField& field)
{
    if (field.n() >= 0) raise(ErrorKind::InvalidArgument, "complex_classify requires N < 0");
    const std::string root = "√" + std::to_string(field.n());
    if (field.n() == -1) {
        return {field, ComplexCase::Gaussian, "{ℓ·i^m·(1±i)^δ : ℓ,m ∈ ℤ, δ ∈ {0,1}}"};
    }
    if (field.n() == -3) {
        return {field, ComplexCase::Eisenstein, "{ℓ·u·(" + root + ")^δ : ℓ ∈ ℤ, u ∈ O^×, δ ∈ {0,1}}"};
    }
    return {field, ComplexCase::Generic, "{ℓ·(" + root + ")^δ : ℓ ∈ ℤ, δ ∈ {0,1}}"};
}

bool sqrt_class(const Integer& c, int j_parity, const QuadField& field)
{
    require_real(field);
    if (c < 1 || squarefree_part(c) != c) raise(ErrorKind::InvalidArgument, to_string(c) + " is not squarefree");
    const Integer n = field.n_integer();
    if (j_parity % 2 == 0) return c == 1 || c == n;
    if (fundamental_unit(field).unit_norm == -1) return false;

    const Kappas k = kappas(field);
    if (c == k.kappa1 || c == k.kappa2) return true;
    for (const Integer* kappa : {&k.kappa1, &k.kappa2}) {
        if (gcd(n, *kappa) == 1 && c == n * *kappa) return true;
    }
    return false;
}

} // namespace qdn
