#include "qdn/enumerate.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "qdn/error.hpp"
#include "qdn/units.hpp"

namespace qdn {

namespace {

bool le(const QuadInt& x, const Rational& bound) { return compare(x, bound) <= 0; }

Integer floor_of(const Rational& r)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

QuadInt generator_product(const GeneratorSet& gens, const Delta& delta)
{
    QuadInt out = QuadInt::from_integer(gens.field, 1);
    for (int i = 0; i < 3; ++i) {
        if (delta[i]) out *= gens.get(static_cast<GeneratorId>(i)).value;
    }
    return out;
}

DPlusElement make_element(const QuadInt& value, CanonicalFactorization f, bool is_integer)
{
    return {value, std::move(f), approx(value), is_integer};
}

void sort_elements(std::vector<DPlusElement>& items)
{
    std::sort(items.begin(), items.end(), [](const DPlusElement& a, const DPlusElement& b) {
        return compare_real(a.value, b.value) < 0;
    });
}

bool unit_norm_matches(const QuadField& field, NormFilter filter)
{
    if (filter == NormFilter::Any) return true;
    const int norm = fundamental_unit(field).unit_norm;
    return filter == NormFilter::MinusOne ? norm == -1 : norm == 1;
}

std::vector<DPlusElement> enumerate_shard(const std::vector<std::int64_t>& fields, const Rational& m_bound,
                                          NormFilter filter)
{
    std::vector<DPlusElement> out;
    for (std::int64_t n : fields) {
        const QuadField field(n);
        if (!unit_norm_matches(field, filter)) continue;
        if (fundamental_unit(field).unit_norm == -1 && !norm_minus_one_field_admitted(n, m_bound)) continue;
        auto part = enumerate_field(field, m_bound, IntegerPolicy::Exclude);
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

} // namespace

bool in_dplus(const QuadInt& x)
{
    if (x.field().n() < 2) raise(ErrorKind::InvalidArgument, "a real quadratic field is required");
    if (x.is_zero() || !is_dnumber(x)) return false;
    const QuadInt conj = x.conjugate();
    return compare(x, conj) >= 0 && compare(conj, Integer(1)) >= 0;
}

std::vector<DPlusElement> enumerate_field(const QuadField& field, const Rational& m_bound, IntegerPolicy integers)
{
    if (field.n() < 2) raise(ErrorKind::InvalidArgument, "a real quadratic field is required");
    if (m_bound < 1) raise(ErrorKind::InvalidArgument, "M must be at least 1");

    const GeneratorSet gens = generator_set(field);
    const FundamentalUnit eps = fundamental_unit(field);
    const std::vector<Delta> deltas = allowed_deltas(gens);
    std::vector<QuadInt> products;
    for (const Delta& d : deltas) products.push_back(generator_product(gens, d));

    std::vector<DPlusElement> out;
    // Starting at m = -1 covers products of both kappa generators, which
    // carry an extra eps.
    QuadInt unit = unit_power(eps, -1);
    for (long m = -1;; ++m, unit *= eps.value) {
        bool any_within = false;
        for (std::size_t k = 0; k < deltas.size(); ++k) {
            const QuadInt base = unit * products[k];
            if (!le(base, m_bound)) continue;
            any_within = true;
            const QuadInt base_conj = base.conjugate();
            if (compare(base, base_conj) < 0 || base_conj.sign() <= 0) continue;
            for (Integer ell = 1;; ++ell) {
                const QuadInt value = base * ell;
                if (!le(value, m_bound)) break;
                if (compare(base_conj * ell, Integer(1)) < 0) continue;
                const bool rational = value.is_rational();
                if (rational && integers == IntegerPolicy::Exclude) continue;
                out.push_back(make_element(value, {field, ell, m, deltas[k]}, rational));
            }
        }
        if (!any_within && m >= 0) break;
    }
    sort_elements(out);
    return out;
}

std::vector<DPlusElement> enumerate_all(const Rational& m_bound, const EnumerateOptions& options)
{
    if (m_bound < 1) raise(ErrorKind::InvalidArgument, "M must be at least 1");
    const Rational limit_q = (2 * m_bound - 1) * (2 * m_bound - 1);
    const std::int64_t limit = floor_of(limit_q).get_si();

    std::vector<std::int64_t> fields;
    for (std::int64_t n = 2; n <= limit; ++n) {
        if (is_squarefree(n)) fields.push_back(n);
    }

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, fields.size())));

    std::vector<DPlusElement> out;
    if (threads <= 1) {
        out = enumerate_shard(fields, m_bound, options.norm_filter);
    } else {
        // Strided shards balance the cost, which grows with N.
        std::vector<std::future<std::vector<DPlusElement>>> futures;
        for (unsigned t = 0; t < threads; ++t) {
            std::vector<std::int64_t> shard;
            for (std::size_t i = t; i < fields.size(); i += threads) shard.push_back(fields[i]);
            futures.push_back(std::async(std::launch::async, enumerate_shard, std::move(shard), m_bound,
                                         options.norm_filter));
        }
        for (auto& f : futures) {
            auto part = f.get();
            std::move(part.begin(), part.end(), std::back_inserter(out));
        }
    }

    if (options.include_integers) {
        const QuadField home(2);
        for (Integer k = 1; k <= floor_of(m_bound); ++k) {
            const QuadInt value = QuadInt::from_integer(home, k);
            out.push_back(make_element(value, {home, k, 0, {0, 0, 0}}, true));
        }
    }
    sort_elements(out);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const DPlusElement& a, const DPlusElement& b) {
                              return compare_real(a.value, b.value) == 0;
                          }),
              out.end());
    return out;
}

Integer cardinality_bound(const Integer& m_bound)
{
    if (m_bound < 1) raise(ErrorKind::InvalidArgument, "M must be at least 1");
    const Integer odd = 2 * m_bound - 1;
    return 8 * m_bound * (m_bound + 1) * odd * odd;
}

bool norm_minus_one_field_admitted(std::int64_t n, const Rational& m_bound)
{
    // N + 2 sqrt(N) <= 4M - 1  iff  r = 4M - 1 - N >= 0 and 4N <= r^2.
    const Rational r = 4 * m_bound - 1 - Rational(static_cast<long>(n));
    if (r < 0) return false;
    return Rational(4 * static_cast<long>(n)) <= r * r;
}

NormMinusOneBounds norm_minus_one_bounds(const QuadField& field, const DPlusElement& x)
{
    const FundamentalUnit eps = fundamental_unit(field);
    if (eps.unit_norm != -1) raise(ErrorKind::NotApplicable, "the fundamental unit has norm +1");
    if (!(x.value.field() == field)) raise(ErrorKind::FieldMismatch, "element from another field");

    const CanonicalFactorization& f = x.factorization;
    const QuadInt power = unit_power(eps, f.m);
    QuadInt scaled = QuadInt::from_integer(field, f.ell);
    if (f.delta[0]) scaled *= QuadInt::sqrt_n(field);
    const bool ell_bound = compare(scaled, power) >= 0;
    const bool alpha_bound = compare(x.value, unit_power(eps, 2 * f.m)) >= 0;
    return {ell_bound, alpha_bound};
}

QuadInt irrational_lower_bound(const QuadField& field)
{
    const FundamentalUnit eps = fundamental_unit(field);
    if (eps.unit_norm != -1) raise(ErrorKind::NotApplicable, "the fundamental unit has norm +1");
    return eps.value * eps.value;
}

std::vector<QuadInt> brute_force_oracle(const QuadField& field, const Rational& m_bound)
{
    if (field.n() < 2) raise(ErrorKind::InvalidArgument, "a real quadratic field is required");
    const Integer n = field.n_integer();
    const Integer p_max = floor_of(2 * m_bound);
    std::vector<QuadInt> out;
    for (Integer p = 0; p <= p_max; ++p) {
        for (Integer q = 0; q * q * n <= p * p; ++q) {
            if (!is_integral(field, p, q) || (p == 0 && q == 0)) continue;
            const QuadInt x(field, p, q);
            if (compare(x, m_bound) > 0) continue;
            if (in_dplus(x)) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadInt& a, const QuadInt& b) { return compare(a, b) < 0; });
    return out;
}

std::string to_tsv(const DPlusElement& x)
{
    const CanonicalFactorization& f = x.factorization;
    const std::string n = x.is_integer ? "1" : std::to_string(x.value.field().n());
    std::string delta;
    for (int d : f.delta) delta += static_cast<char>('0' + d);
    return n + "\t" + to_string(x.value.p()) + "\t" + to_string(x.value.q()) + "\t" + to_string(f.ell) + "\t" +
           std::to_string(f.m) + "\t" + delta + "\t" + x.approx;
}

} // namespace qdn
