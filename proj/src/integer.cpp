#include "qdn/integer.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "qdn/error.hpp"

namespace qdn {

namespace {

// Snapshots are immutable once published, so readers never race a re-sieve.
std::shared_ptr<const std::vector<std::uint32_t>> small_primes(std::uint64_t limit)
{
    static std::mutex mutex;
    static std::shared_ptr<const std::vector<std::uint32_t>> primes;
    static std::uint64_t sieved = 0;

    std::lock_guard lock(mutex);
    if (!primes || limit > sieved) {
        std::vector<bool> composite(limit + 1, false);
        auto fresh = std::make_shared<std::vector<std::uint32_t>>();
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            fresh->push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
        primes = std::move(fresh);
        sieved = limit;
    }
    return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of a composite
// n, or 0 when the iteration cap is hit.
Integer rho_factor(const Integer& n, unsigned long c, std::uint64_t max_iterations)
{
    Integer y = 2, x, ys, q = 1, g = 1, diff;
    const std::uint64_t block = 128;
    std::uint64_t r = 1, iterations = 0;

    auto step = [&](Integer& v) {
        v = v * v + c;
        v %= n;
    };

    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t todo = std::min(block, r - k);
            for (std::uint64_t i = 0; i < todo; ++i) {
                step(y);
                diff = abs(x - y);
                q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += todo;
            iterations += todo;
            if (iterations > max_iterations && g == 1) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time from the saved state.
        do {
            step(ys);
            diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

void factor_cofactor(const Integer& n, std::map<Integer, unsigned>& out, const FactorBudget& budget)
{
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer root = isqrt(n);
        std::map<Integer, unsigned> sub;
        factor_cofactor(root, sub, budget);
        for (const auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    for (unsigned attempt = 0; attempt < budget.rho_attempts; ++attempt) {
        Integer d = rho_factor(n, 1 + 2 * attempt, budget.rho_iterations);
        if (d != 0) {
            factor_cofactor(d, out, budget);
            factor_cofactor(Integer(n / d), out, budget);
            return;
        }
    }
    raise(ErrorKind::FactorizationLimit,
          "could not split " + to_string(n) + " within the Pollard-rho budget");
}

} // namespace

Integer isqrt(const Integer& n)
{
    if (n < 0) raise(ErrorKind::InvalidArgument, "isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n, const FactorBudget& budget)
{
    if (n < 1) raise(ErrorKind::InvalidArgument, "factorize requires n >= 1");

    std::map<Integer, unsigned> found;
    Integer rest = n;
    const auto primes = small_primes(budget.trial_limit);
    for (std::uint32_t p : *primes) {
        if (p > budget.trial_limit) break;
        if (Integer(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++found[Integer(p)];
        }
    }
    if (rest > 1) {
        const Integer limit(static_cast<unsigned long>(budget.trial_limit));
        if (rest <= limit * limit) {
            // Every prime below the trial limit has been removed, so what
            // remains is prime.
            ++found[rest];
        } else {
            factor_cofactor(rest, found, budget);
        }
    }
    return {found.begin(), found.end()};
}

SqfDecomposition squarefree_decompose(const Integer& n, const FactorBudget& budget)
{
    if (n < 1) raise(ErrorKind::InvalidArgument, "squarefree_decompose requires n >= 1");
    SqfDecomposition out{n, 1, 1};
    for (const auto& [p, e] : factorize(n, budget)) {
        for (unsigned i = 0; i < e / 2; ++i) out.square_part *= p;
        if (e % 2) out.squarefree_part *= p;
    }
    return out;
}

Integer squarefree_part(const Integer& n, const FactorBudget& budget)
{
    return squarefree_decompose(n, budget).squarefree_part;
}

bool is_squarefree(std::int64_t n)
{
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

std::vector<Integer> divisors(const Integer& n, const FactorBudget& budget)
{
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factorize(n, budget)) {
        const std::size_t base = out.size();
        Integer power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

namespace {

std::mutex& budget_mutex()
{
    static std::mutex m;
    return m;
}

FactorBudget& budget_slot()
{
    static FactorBudget b;
    return b;
}

} // namespace

FactorBudget default_budget()
{
    std::lock_guard lock(budget_mutex());
    return budget_slot();
}

void set_default_budget(const FactorBudget& budget)
{
    std::lock_guard lock(budget_mutex());
    budget_slot() = budget;
}

Integer parse_integer(const std::string& text)
{
    Integer out;
    std::string body = text;
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    if (body.empty() || out.set_str(body, 10) != 0) {
        raise(ErrorKind::InvalidArgument, "not an integer: '" + text + "'");
    }
    return out;
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) raise(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

} // namespace qdn
