#include "qdn/units.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "qdn/error.hpp"

namespace qdn {

namespace {

struct CFState {
    Integer p;
    Integer q;
    bool operator==(const CFState&) const = default;
};

void require_real(const QuadField& field)
{
    if (field.n() < 2) raise(ErrorKind::InvalidArgument, "N = " + std::to_string(field.n()) + " has no fundamental unit");
}

CFState initial_state(const QuadField& field, CFKind kind)
{
    if (kind == CFKind::SqrtN) return {0, 1};
    if (field.omega_kind() != OmegaKind::HalfOnePlusSqrtN) {
        raise(ErrorKind::InvalidArgument, "(1+√N)/2 is not integral for N = " + std::to_string(field.n()));
    }
    return {1, 2};
}

// One step of the (P + sqrt(D))/Q expansion; returns the partial quotient.
Integer cf_step(CFState& s, const Integer& d, const Integer& root)
{
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), Integer(s.p + root).get_mpz_t(), s.q.get_mpz_t());
    Integer p = a * s.q - s.p;
    Integer q = (d - p * p) / s.q;
    s = {std::move(p), std::move(q)};
    return a;
}

std::map<std::int64_t, FundamentalUnit>& unit_memo()
{
    static std::map<std::int64_t, FundamentalUnit> memo;
    return memo;
}

std::shared_mutex& unit_memo_mutex()
{
    static std::shared_mutex mutex;
    return mutex;
}

FundamentalUnit compute_unit(const QuadField& field)
{
    const CFKind kind = field.omega_kind() == OmegaKind::HalfOnePlusSqrtN ? CFKind::Omega : CFKind::SqrtN;
    const CFExpansion cf = cf_expand(field, kind);
    const Integer n = field.n_integer();

    Integer h_prev = 1, h = cf.a0;
    Integer k_prev = 0, k = 1;
    const std::size_t limit = 2 * cf.period.size() + 2;
    for (std::size_t i = 0;; ++i) {
        Integer t = kind == CFKind::SqrtN ? Integer(2 * h) : Integer(2 * h - k);
        Integer u = kind == CFKind::SqrtN ? Integer(2 * k) : k;
        const Integer value = t * t - n * u * u;
        if (value == 4 || value == -4) {
            const int unit_norm = value == 4 ? 1 : -1;
            QuadInt eps(field, t, u);
            return {field, std::move(t), std::move(u), unit_norm, std::move(eps)};
        }
        if (i >= limit) break;
        const Integer& a = cf.period[i % cf.period.size()];
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = std::move(h);
        h = std::move(h_next);
        k_prev = std::move(k);
        k = std::move(k_next);
    }
    raise(ErrorKind::InternalInconsistency, "no unit among the convergents for N = " + std::to_string(field.n()));
}

std::uint64_t isqrt_u64(std::uint64_t v)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool is_square_u128(unsigned __int128 v)
{
    // Quadratic residues mod 64 reject most non-squares early.
    static constexpr std::uint64_t residues64 = [] {
        std::uint64_t mask = 0;
        for (unsigned i = 0; i < 64; ++i) mask |= std::uint64_t{1} << (i * i % 64);
        return mask;
    }();
    if (!((residues64 >> static_cast<unsigned>(v & 63)) & 1)) return false;
    auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

std::vector<bool> squarefree_sieve(std::uint64_t limit)
{
    std::vector<bool> sqf(limit + 1, true);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        for (std::uint64_t m = p * p; m <= limit; m += p * p) sqf[m] = false;
    }
    return sqf;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Candidates n in [1, bound] with kappa n^2 = 4 (mod modulus), ascending.
std::vector<std::uint64_t> residue_candidates(std::uint64_t kappa, std::uint64_t modulus, std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (modulus == 1) {
        for (std::uint64_t n = 1; n <= bound; ++n) out.push_back(n);
        return out;
    }
    const std::uint64_t span = std::min(modulus, bound + 1);
    const auto four = static_cast<unsigned __int128>(4 % modulus);
    for (std::uint64_t r = 0; r < span; ++r) {
        const unsigned __int128 lhs = (static_cast<unsigned __int128>(kappa) * r % modulus) * r % modulus;
        if (lhs != four) continue;
        for (std::uint64_t n = r; n <= bound; n += modulus) {
            if (n >= 1) out.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<PellWitness> verified(const QuadField& field, std::uint64_t kappa, std::uint64_t n,
                                    const FactorBudget& budget)
{
    const Integer k(static_cast<unsigned long>(kappa));
    const Integer m(static_cast<unsigned long>(n));
    const Integer inner = k * m * m - 4;
    if (squarefree_part(Integer(k * inner), budget) != field.n_integer()) {
        raise(ErrorKind::InternalInconsistency, "Pell witness failed verification");
    }
    return PellWitness{k, m};
}

// Wide search kept on arbitrary-precision integers; only used for bounds
// beyond the machine-word fast path.
std::optional<PellWitness> witness_search_slow(const QuadField& field, const Integer& bound, const FactorBudget& budget)
{
    const Integer n_field = field.n_integer();
    for (Integer kappa = 2; kappa <= bound; ++kappa) {
        if (squarefree_part(kappa, budget) != kappa) continue;
        for (Integer n = 1; n <= bound; ++n) {
            const Integer inner = kappa * n * n - 4;
            if (inner <= 0 || is_perfect_square(inner)) continue;
            const Integer v = kappa * inner;
            if (!mpz_divisible_p(v.get_mpz_t(), n_field.get_mpz_t())) continue;
            if (!is_perfect_square(Integer(v / n_field))) continue;
            return PellWitness{kappa, n};
        }
    }
    return std::nullopt;
}

} // namespace

CFExpansion cf_expand(const QuadField& field, CFKind kind)
{
    require_real(field);
    const Integer d = field.n_integer();
    const Integer root = isqrt(d);
    CFState state = initial_state(field, kind);

    CFExpansion out{kind, cf_step(state, d, root), {}};
    const CFState start = state;
    do {
        out.period.push_back(cf_step(state, d, root));
    } while (!(state == start));
    return out;
}

FundamentalUnit fundamental_unit(const QuadField& field)
{
    require_real(field);
    {
        std::shared_lock lock(unit_memo_mutex());
        auto it = unit_memo().find(field.n());
        if (it != unit_memo().end()) return it->second;
    }
    FundamentalUnit eps = compute_unit(field);
    std::unique_lock lock(unit_memo_mutex());
    return unit_memo().try_emplace(field.n(), std::move(eps)).first->second;
}

bool negative_pell_solvable(const QuadField& field)
{
    const FundamentalUnit eps = fundamental_unit(field);
    const bool odd_period = cf_expand(field, CFKind::SqrtN).period.size() % 2 == 1;
    if (odd_period != (eps.unit_norm == -1)) {
        raise(ErrorKind::InternalInconsistency, "unit norm disagrees with the period parity of √" +
                                                    std::to_string(field.n()));
    }
    return eps.unit_norm == -1;
}

QuadInt unit_power(const FundamentalUnit& eps, long m)
{
    if (m >= 0) return eps.value.pow(static_cast<unsigned long>(m));
    const QuadInt inverse = eps.value.conjugate() * Integer(eps.unit_norm);
    return inverse.pow(static_cast<unsigned long>(-m));
}

std::optional<PellWitness> pell_witness_search(const QuadField& field, const Integer& bound, const FactorBudget& budget)
{
    require_real(field);
    if (bound < 1) raise(ErrorKind::InvalidArgument, "witness bound must be at least 1");
    if (bound > 1'000'000 || field.n() > (1LL << 31)) return witness_search_slow(field, bound, budget);

    const std::uint64_t limit = bound.get_ui();
    const auto n_field = static_cast<std::uint64_t>(field.n());
    const std::vector<bool> sqf = squarefree_sieve(limit);
    for (std::uint64_t kappa = 2; kappa <= limit; ++kappa) {
        if (!sqf[kappa]) continue;
        // N | kappa(kappa n^2 - 4) iff N/gcd(N, kappa) | kappa n^2 - 4, the
        // cofactor being coprime to kappa as N is squarefree.
        const std::uint64_t modulus = n_field / gcd_u64(n_field, kappa);
        for (std::uint64_t n : residue_candidates(kappa, modulus, limit)) {
            const unsigned __int128 scaled = static_cast<unsigned __int128>(kappa) * n * n;
            if (scaled <= 4) continue;
            const unsigned __int128 inner = scaled - 4;
            const auto inner64 = static_cast<std::uint64_t>(inner);
            const std::uint64_t r = isqrt_u64(inner64);
            if (r * r == inner64) continue;
            const unsigned __int128 v = inner * kappa;
            if (v % n_field != 0) continue;
            if (!is_square_u128(v / n_field)) continue;
            return verified(field, kappa, n, budget);
        }
    }
    return std::nullopt;
}

} // namespace qdn
