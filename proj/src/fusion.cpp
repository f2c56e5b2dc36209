#include "qdn/fusion.hpp"

#include <algorithm>
#include <functional>
#include <mpfr.h>

#include "qdn/enumerate.hpp"
#include "qdn/error.hpp"
#include "qdn/units.hpp"

namespace qdn {

namespace {

QuadInt one(const QuadField& field) { return QuadInt::from_integer(field, 1); }

void check_integrality_class(const FundamentalUnit& eps, long m, const QuadInt& value)
{
    const bool rational = eps.unit_norm == 1 || m % 2 != 0;
    const bool ok = rational ? value.is_rational() : value.p() == 0;
    if (!ok) raise(ErrorKind::InternalInconsistency, "quantum integer has the wrong shape: " + render(value));
}

QuadInt target_value(const QuadField& field, const Integer& ell, long m)
{
    return unit_power(fundamental_unit(field), m) * ell;
}

// Exponents j >= 1 with eps^j <= target; only even j for norm -1.
std::vector<long> admissible_exponents(const FundamentalUnit& eps, const QuadInt& target)
{
    std::vector<long> out;
    QuadInt power = eps.value;
    for (long j = 1; compare(power, target) <= 0; ++j, power *= eps.value) {
        if (eps.unit_norm == -1 && j % 2 != 0) continue;
        out.push_back(j);
    }
    return out;
}

// Distinct partitions of n into parts drawn from `parts` (descending),
// each as a non-increasing list.
void partitions(const Integer& n, const std::vector<Integer>& parts, std::size_t from, std::vector<Integer>& current,
                std::vector<std::vector<Integer>>& out)
{
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
        if (parts[i] > n) continue;
        current.push_back(parts[i]);
        partitions(n - parts[i], parts, i, current, out);
        current.pop_back();
    }
}

} // namespace

QuantumInt quantum_int(const QuadField& field, long m)
{
    if (field.n() < 2) raise(ErrorKind::InvalidArgument, "a real quadratic field is required");
    const FundamentalUnit eps = fundamental_unit(field);
    const QuadInt s = eps.value + unit_power(eps, -1);

    QuadInt prev = QuadInt::from_integer(field, 0);
    QuadInt cur = one(field);
    const long steps = m < 0 ? -m : m;
    if (steps == 0) {
        cur = prev;
    } else {
        for (long k = 1; k < steps; ++k) {
            QuadInt next = s * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    if (m < 0) cur = -cur;
    check_integrality_class(eps, m, cur);
    return {field, m, cur};
}

QuadInt quantum_int_direct(const QuadField& field, long m)
{
    const FundamentalUnit eps = fundamental_unit(field);
    const QuadInt num = unit_power(eps, m) - unit_power(eps, -m);
    const QuadInt den = eps.value - unit_power(eps, -1);
    return exact_divide(num, den);
}

bool verify_decomposition(const Decomposition& d)
{
    const QuadField& field = d.field;
    const FundamentalUnit eps = fundamental_unit(field);
    const long m = d.target.m;

    QuadInt lhs = QuadInt::from_integer(field, d.d_int);
    for (const auto& [j, lj] : d.coeffs) lhs += unit_power(eps, j) * lj;
    if (!(lhs == evaluate(d.target))) return false;

    const QuadInt left = quantum_int(field, m).value * d.d_int;
    QuadInt right = QuadInt::from_integer(field, 0);
    for (const auto& [j, lj] : d.coeffs) right += quantum_int(field, j - m).value * lj;
    return left == right;
}

std::vector<Decomposition> decompose_global_dim(const QuadField& field, const Integer& ell, long m,
                                                const std::optional<Integer>& divisor_constraint)
{
    if (field.n() < 2) raise(ErrorKind::InvalidArgument, "a real quadratic field is required");
    if (ell < 1) raise(ErrorKind::InvalidArgument, "ell must be positive");
    if (m < 0) raise(ErrorKind::InvalidArgument, "m must be nonnegative");
    if (divisor_constraint && *divisor_constraint < 1) raise(ErrorKind::InvalidArgument, "constraint must be positive");

    const FundamentalUnit eps = fundamental_unit(field);
    const QuadInt target = target_value(field, ell, m);
    if (!in_dplus(target)) raise(ErrorKind::NotInDPlus, render(target));

    const std::vector<long> js = admissible_exponents(eps, target);
    std::vector<QuadInt> powers;
    for (long j : js) powers.push_back(unit_power(eps, j));
    const std::vector<Integer> pool = divisors(divisor_constraint ? *divisor_constraint : ell);

    std::vector<Decomposition> out;
    std::vector<Integer> chosen(js.size(), 0);
    // Match the sqrt(N) coordinate first (every eps^j has u_j > 0), largest
    // j first, then read d_int off the rational coordinate.
    std::function<void(std::size_t, const Integer&, const Integer&)> solve =
        [&](std::size_t idx, const Integer& rem_p, const Integer& rem_q) {
            if (idx == js.size()) {
                if (rem_q != 0 || rem_p <= 0 || rem_p % 2 != 0) return;
                const Integer d_int = rem_p / 2;
                if (!std::binary_search(pool.begin(), pool.end(), d_int)) return;
                Decomposition d{field, {field, ell, m, {0, 0, 0}}, d_int, {}};
                for (std::size_t k = 0; k < js.size(); ++k) {
                    if (chosen[k] != 0) d.coeffs[js[k]] = chosen[k];
                }
                if (!verify_decomposition(d)) raise(ErrorKind::InternalInconsistency, "decomposition check failed");
                out.push_back(std::move(d));
                return;
            }
            const std::size_t k = js.size() - 1 - idx;
            const QuadInt& pw = powers[k];
            const Integer max_l = rem_q / pw.q();
            for (Integer l = max_l; l >= 0; --l) {
                chosen[k] = l;
                solve(idx + 1, rem_p - l * pw.p(), rem_q - l * pw.q());
            }
            chosen[k] = 0;
        };
    solve(0, target.p(), target.q());

    std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) { return a.d_int > b.d_int; });
    return out;
}

CandidateScan candidate_scan(const QuadField& field, const Integer& ell, long m, const std::vector<Integer>& dint_pool,
                             const std::vector<std::pair<long, long>>& ranges)
{
    const FundamentalUnit eps = fundamental_unit(field);
    const QuadInt target = target_value(field, ell, m);
    std::vector<QuadInt> powers;
    for (std::size_t j = 1; j <= ranges.size(); ++j) powers.push_back(unit_power(eps, static_cast<long>(j)));

    CandidateScan scan;
    std::vector<long> current(ranges.size());
    std::function<void(std::size_t, const Integer&, const Integer&)> walk = [&](std::size_t idx, const Integer& p,
                                                                                const Integer& q) {
        if (idx == ranges.size()) {
            for (const Integer& d : dint_pool) {
                ++scan.scanned;
                if (p + 2 * d != target.p() || q != target.q()) continue;
                Decomposition dec{field, {field, ell, m, {0, 0, 0}}, d, {}};
                for (std::size_t k = 0; k < current.size(); ++k) {
                    if (current[k] != 0) dec.coeffs[static_cast<long>(k + 1)] = current[k];
                }
                scan.solutions.push_back(std::move(dec));
            }
            return;
        }
        for (long l = ranges[idx].first; l <= ranges[idx].second; ++l) {
            current[idx] = l;
            walk(idx + 1, p + l * powers[idx].p(), q + l * powers[idx].q());
        }
    };
    walk(0, 0, 0);
    std::sort(scan.solutions.begin(), scan.solutions.end(),
              [](const Decomposition& a, const Decomposition& b) { return a.d_int > b.d_int; });
    return scan;
}

std::vector<SimpleDimProfile> refine_simple_dims(const Decomposition& d, bool apply_modular_filter)
{
    const QuadField& field = d.field;
    const FundamentalUnit eps = fundamental_unit(field);
    const QuadInt target = evaluate(d.target);

    std::vector<std::vector<std::vector<SimplePart>>> per_j;
    for (const auto& [j, lj] : d.coeffs) {
        if (lj == 0) continue;
        const QuadInt power = unit_power(eps, j);
        std::vector<Integer> parts;
        for (Integer c = lj; c >= 1; --c) {
            if (!sqrt_class(squarefree_part(c), static_cast<int>(((j % 2) + 2) % 2), field)) continue;
            if (apply_modular_filter && !try_divide(target, power * c)) continue;
            parts.push_back(c);
        }
        std::vector<std::vector<Integer>> found;
        std::vector<Integer> current;
        partitions(lj, parts, 0, current, found);
        std::vector<std::vector<SimplePart>> choices;
        for (const auto& f : found) {
            std::vector<SimplePart> row;
            for (auto it = f.rbegin(); it != f.rend(); ++it) row.push_back({*it, j});
            choices.push_back(std::move(row));
        }
        per_j.push_back(std::move(choices));
    }

    std::vector<std::vector<SimplePart>> combos{{}};
    for (const auto& choices : per_j) {
        std::vector<std::vector<SimplePart>> next;
        for (const auto& prefix : combos) {
            for (const auto& choice : choices) {
                auto row = prefix;
                row.insert(row.end(), choice.begin(), choice.end());
                next.push_back(std::move(row));
            }
        }
        combos = std::move(next);
    }

    std::vector<SimpleDimProfile> out;
    for (auto& parts : combos) out.push_back({d, std::move(parts)});
    return out;
}

NearGroupDims near_group_dim(const Integer& group_order, const Integer& n)
{
    if (group_order < 1) raise(ErrorKind::InvalidArgument, "|G| must be positive");
    if (n < 1) raise(ErrorKind::InvalidArgument, "n must be positive; use tambara_yamagami_dim for k = 0");
    const Integer g = group_order;
    const Integer disc = n * n * g * g + 4 * g;
    const SqfDecomposition sq = squarefree_decompose(disc);
    if (sq.squarefree_part == 1) raise(ErrorKind::NotApplicable, "the dimension is rational");

    const QuadField field(sq.squarefree_part.get_si());
    const QuadInt rho(field, n * g, sq.square_part);
    const QuadInt sqrt_disc(field, 0, 2 * sq.square_part);
    const QuadInt rho_sq = rho * rho;
    const QuadInt cat_dim = sqrt_disc * rho;
    if (!(cat_dim == rho_sq + QuadInt::from_integer(field, g)))
        raise(ErrorKind::InternalInconsistency, "near-group dimension mismatch");

    const auto quotient = try_divide(rho_sq, QuadInt::from_integer(field, g));
    const bool unit = quotient && (quotient->norm() == 1 || quotient->norm() == -1);
    return {field, rho, rho_sq, cat_dim, unit};
}

Integer tambara_yamagami_dim(const Integer& group_order)
{
    if (group_order < 1) raise(ErrorKind::InvalidArgument, "|G| must be positive");
    return 2 * group_order;
}

HaagerupIzumiDims haagerup_izumi_dim(const Integer& group_order)
{
    if (group_order < 1) raise(ErrorKind::InvalidArgument, "|G| must be positive");
    const Integer& g = group_order;
    const SqfDecomposition sq = squarefree_decompose(g * g + 4);
    const QuadField field(sq.squarefree_part.get_si());
    const QuadInt rho(field, g, sq.square_part);
    const QuadInt cat_dim = (one(field) + rho * rho) * g;
    const QuadInt sqrt_disc(field, 0, 2 * sq.square_part);
    if (!(cat_dim == rho * sqrt_disc * g)) raise(ErrorKind::InternalInconsistency, "Haagerup-Izumi dimension mismatch");
    return {field, rho, cat_dim, rho.norm() == -1};
}

std::string render(const Dimension& d)
{
    if (const auto* i = std::get_if<Integer>(&d)) return to_string(*i);
    return render(std::get<QuadInt>(d));
}

GeneralizedNearGroupDims generalized_near_group_check(const Integer& group_order, const Integer& stabilizer_order,
                                                      const Integer& k_sum)
{
    if (group_order < 1 || stabilizer_order < 1) raise(ErrorKind::InvalidArgument, "orders must be positive");
    if (k_sum < 0) raise(ErrorKind::InvalidArgument, "K must be nonnegative");
    if (group_order % stabilizer_order != 0)
        raise(ErrorKind::InvalidArgument, "|G_rho| must divide |G|");
    if ((k_sum * k_sum) % stabilizer_order != 0)
        raise(ErrorKind::Rejected, to_string(stabilizer_order) + " does not divide K^2 = " + to_string(k_sum * k_sum));

    const Integer index = group_order / stabilizer_order;
    const Integer disc = k_sum * k_sum + 4 * stabilizer_order;
    const SqfDecomposition sq = squarefree_decompose(disc);
    if (sq.squarefree_part == 1) {
        // (K + s)/2 is an integer since K^2 and s^2 = K^2 + 4|G_rho| share parity.
        const Integer rho = (k_sum + sq.square_part) / 2;
        return {rho, index * (rho * rho + stabilizer_order), true};
    }
    const QuadField field(sq.squarefree_part.get_si());
    const QuadInt rho(field, k_sum, sq.square_part);
    const QuadInt cat_dim = (rho * rho + QuadInt::from_integer(field, stabilizer_order)) * index;
    return {rho, cat_dim, is_dnumber(rho)};
}

// ---------------------------------------------------------------------------
// Kronecker screen

namespace {

// Closed interval with MPFR endpoints.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec)
    {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o)
    {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o)
    {
        if (this != &o) {
            mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
            mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~Interval()
    {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    // mid +- 2^-radius_exp
    static Interval around(const mpfr_t mid, mpfr_prec_t prec, long radius_exp)
    {
        Interval out(prec);
        mpfr_t r;
        mpfr_init2(r, prec);
        mpfr_set_ui_2exp(r, 1, -radius_exp, MPFR_RNDU);
        mpfr_sub(out.lo_, mid, r, MPFR_RNDD);
        mpfr_add(out.hi_, mid, r, MPFR_RNDU);
        mpfr_clear(r);
        return out;
    }

    Interval& add_si(long k)
    {
        mpfr_add_si(lo_, lo_, k, MPFR_RNDD);
        mpfr_add_si(hi_, hi_, k, MPFR_RNDU);
        return *this;
    }
    Interval& operator+=(const Interval& o)
    {
        mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
        return *this;
    }
    Interval scaled(unsigned long k) const
    {
        Interval out(*this);
        mpfr_mul_ui(out.lo_, lo_, k, MPFR_RNDD);
        mpfr_mul_ui(out.hi_, hi_, k, MPFR_RNDU);
        return out;
    }

    bool below(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
    bool above(const Interval& o) const { return mpfr_greater_p(lo_, o.hi_); }

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

// rational + sum over f of coeff * sqrt(f); only for values in Q or a
// quadratic field, so the square roots stay linearly independent.
struct ExactValue {
    Rational rational;
    std::map<std::int64_t, Rational> roots;

    ExactValue& operator+=(const ExactValue& o)
    {
        rational += o.rational;
        for (const auto& [f, c] : o.roots) roots[f] += c;
        return *this;
    }
    ExactValue scaled(long k) const
    {
        ExactValue out = *this;
        out.rational *= k;
        for (auto& [f, c] : out.roots) c *= k;
        return out;
    }
    bool operator==(const ExactValue& o) const
    {
        auto nonzero = [](const std::map<std::int64_t, Rational>& m) {
            std::map<std::int64_t, Rational> out;
            for (const auto& [f, c] : m) {
                if (c != 0) out[f] = c;
            }
            return out;
        };
        return rational == o.rational && nonzero(roots) == nonzero(o.roots);
    }
};

Rational fraction(long a, long b)
{
    Rational out{Integer(a), Integer(b)};
    out.canonicalize();
    return out;
}

ExactValue exact_rational(long a) { return {fraction(a, 1), {}}; }
ExactValue exact_with_root(long a, long b, std::int64_t f, long c, long d) { return {fraction(a, b), {{f, fraction(c, d)}}}; }

// 4cos^2(pi/n) where it is rational or quadratic.
std::optional<ExactValue> exact_square(int n)
{
    switch (n) {
    case 3: return exact_rational(1);
    case 4: return exact_rational(2);
    case 5: return exact_with_root(3, 2, 5, 1, 2);
    case 6: return exact_rational(3);
    case 8: return exact_with_root(2, 1, 2, 1, 1);
    case 10: return exact_with_root(5, 2, 5, 1, 2);
    case 12: return exact_with_root(2, 1, 3, 1, 1);
    default: return std::nullopt;
    }
}

// 2cos(pi/n) where it is rational or quadratic.
std::optional<ExactValue> exact_dim(int n)
{
    switch (n) {
    case 3: return exact_rational(1);
    case 4: return exact_with_root(0, 1, 2, 1, 1);
    case 5: return exact_with_root(1, 2, 5, 1, 2);
    case 6: return exact_with_root(0, 1, 3, 1, 1);
    default: return std::nullopt;
    }
}

class Screen {
public:
    Screen(const QuadInt& target, unsigned bits) : prec_(bits + 32), radius_(bits), target_(prec_)
    {
        mpfr_t pi;
        mpfr_init2(pi, prec_);
        mpfr_const_pi(pi, MPFR_RNDN);
        mpfr_init2(pi_, prec_);
        mpfr_set(pi_, pi, MPFR_RNDN);
        mpfr_clear(pi);

        // target - 1 = (p - 2)/2 + (q/2) sqrt(N)
        const QuadField& field = target.field();
        exact_target_.rational = Rational(Integer(target.p() - 2), Integer(2));
        exact_target_.rational.canonicalize();
        Rational root_coeff(target.q(), Integer(2));
        root_coeff.canonicalize();
        exact_target_.roots[field.n()] = root_coeff;

        mpfr_t v, root;
        mpfr_init2(v, prec_);
        mpfr_init2(root, prec_);
        mpfr_set_si(root, static_cast<long>(field.n()), MPFR_RNDN);
        mpfr_sqrt(root, root, MPFR_RNDN);
        mpfr_mul_z(root, root, target.q().get_mpz_t(), MPFR_RNDN);
        mpfr_add_z(v, root, target.p().get_mpz_t(), MPFR_RNDN);
        mpfr_div_ui(v, v, 2, MPFR_RNDN);
        mpfr_sub_ui(v, v, 1, MPFR_RNDN);
        target_ = Interval::around(v, prec_, radius_);
        mpfr_clear(v);
        mpfr_clear(root);
    }
    ~Screen() { mpfr_clear(pi_); }
    Screen(const Screen&) = delete;
    Screen& operator=(const Screen&) = delete;

    // 4cos^2(pi/n) = 2 + 2cos(2pi/n)
    Interval square(int n) const { return eval(n, true); }
    // 2cos(pi/n)
    Interval dim(int n) const { return eval(n, false); }

    const Interval& target() const { return target_; }
    const ExactValue& exact_target() const { return exact_target_; }

private:
    Interval eval(int n, bool squared) const
    {
        mpfr_t v;
        mpfr_init2(v, prec_);
        mpfr_mul_ui(v, pi_, squared ? 2 : 1, MPFR_RNDN);
        mpfr_div_ui(v, v, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_cos(v, v, MPFR_RNDN);
        mpfr_mul_ui(v, v, 2, MPFR_RNDN);
        if (squared) mpfr_add_ui(v, v, 2, MPFR_RNDN);
        Interval out = Interval::around(v, prec_, radius_);
        mpfr_clear(v);
        return out;
    }

    mpfr_prec_t prec_;
    long radius_;
    mpfr_t pi_;
    Interval target_;
    ExactValue exact_target_;
};

[[noreturn]] void ambiguous(const std::string& what) { raise(ErrorKind::PrecisionInsufficient, what); }

// -1, 0 or 1 for a sum of 4cos^2 values against the target.
int compare_sum(const Screen& screen, const std::vector<int>& members)
{
    Interval sum = screen.square(members.front());
    for (std::size_t i = 1; i < members.size(); ++i) sum += screen.square(members[i]);
    if (sum.below(screen.target())) return -1;
    if (sum.above(screen.target())) return 1;

    ExactValue exact;
    for (int n : members) {
        const auto e = exact_square(n);
        if (!e) ambiguous("cannot separate a multiset sum from the target");
        exact += *e;
    }
    if (exact == screen.exact_target()) return 0;
    ambiguous("intervals overlap but the exact values differ");
}

// d_X^2 - 1 as a nonnegative integer combination of the member dimensions.
bool fusion_rule_ok(const Screen& screen, int x, const std::vector<int>& kinds)
{
    Interval goal = screen.square(x);
    goal.add_si(-1);
    std::optional<ExactValue> goal_exact = exact_square(x);
    if (goal_exact) goal_exact->rational -= 1;

    std::vector<Interval> dims;
    for (int n : kinds) dims.push_back(screen.dim(n));

    std::vector<long> coeff(kinds.size(), 0);
    std::function<bool(std::size_t, const Interval&)> search = [&](std::size_t idx, const Interval& acc) -> bool {
        if (acc.above(goal)) return false;
        if (idx == kinds.size()) {
            if (acc.below(goal)) return false;
            if (!goal_exact) ambiguous("cannot decide a fusion-rule equation");
            ExactValue sum;
            for (std::size_t i = 0; i < kinds.size(); ++i) {
                if (coeff[i] == 0) continue;
                const auto e = exact_dim(kinds[i]);
                if (!e) ambiguous("cannot decide a fusion-rule equation");
                sum += e->scaled(coeff[i]);
            }
            if (sum == *goal_exact) return true;
            ambiguous("fusion-rule intervals overlap but exact values differ");
        }
        for (long k = 0;; ++k) {
            Interval next = acc;
            if (k) next += dims[idx].scaled(static_cast<unsigned long>(k));
            if (next.above(goal)) break;
            coeff[idx] = k;
            if (search(idx + 1, next)) return true;
        }
        coeff[idx] = 0;
        return false;
    };
    return search(0, Interval(64));
}

} // namespace

std::vector<KroneckerCandidate> kronecker_screen(const QuadInt& target, unsigned precision_bits)
{
    if (precision_bits < 16) raise(ErrorKind::InvalidArgument, "precision too small");
    if (!target.field().is_real()) raise(ErrorKind::InvalidArgument, "a real quadratic field is required");
    if (!in_dplus(target)) raise(ErrorKind::NotInDPlus, render(target));
    if (compare(target, Integer(5)) >= 0) raise(ErrorKind::InvalidArgument, "target - 1 must be below 4");

    const Screen screen(target, precision_bits);

    // n_max: the last n with 4cos^2(pi/n) <= target - 1. The values increase
    // towards 4, so this terminates.
    int n_max = 2;
    for (int n = 3;; ++n) {
        const int c = compare_sum(screen, {n});
        if (c > 0) break;
        n_max = n;
    }

    std::vector<KroneckerCandidate> out;
    std::vector<int> members;
    // Members in non-increasing order of n; every value is >= 1 so the
    // multiset has at most target - 1 elements.
    std::function<void(int)> extend = [&](int top) {
        for (int n = top; n >= 3; --n) {
            members.push_back(n);
            const int c = compare_sum(screen, members);
            if (c == 0) {
                std::vector<int> kinds = members;
                kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
                bool ok = true;
                for (int x : kinds) ok = ok && fusion_rule_ok(screen, x, kinds);
                if (ok) out.push_back({std::vector<int>(members.rbegin(), members.rend())});
            } else if (c < 0) {
                extend(n);
            }
            members.pop_back();
        }
    };
    extend(n_max);
    std::sort(out.begin(), out.end(),
              [](const KroneckerCandidate& a, const KroneckerCandidate& b) { return a.orders < b.orders; });
    return out;
}

} // namespace qdn
