#include <doctest.h>

#include <future>

#include "qdn/error.hpp"
#include "qdn/tables.hpp"
#include "qdn/units.hpp"
#include "support.hpp"

using namespace qdn;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST_CASE("integer helpers")
{
    const SqfDecomposition d = squarefree_decompose(342);
    CHECK(d.square_part == 3);
    CHECK(d.squarefree_part == 38);
    CHECK(squarefree_decompose(1).square_part == 1);
    CHECK(squarefree_decompose(1).squarefree_part == 1);
    const SqfDecomposition big = squarefree_decompose(48672);
    CHECK(big.square_part == 156);
    CHECK(big.squarefree_part == 2);
    CHECK(divisors(21) == ints({1, 3, 7, 21}));
    CHECK(isqrt(Integer("1000000000000000000000000")) == Integer("1000000000000"));

    // p * q with both primes above the trial bound; rho splits it quickly.
    const Integer p("1000000007"), q("998244353");
    const auto f = factorize(p * q);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == q);
    CHECK(f[1].first == p);

    FactorBudget tiny;
    tiny.trial_limit = 100;
    tiny.rho_iterations = 1;
    tiny.rho_attempts = 1;
    try {
        factorize(p * q, tiny);
        FAIL("expected FactorizationLimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FactorizationLimit);
    }
}

TEST_CASE("continued fractions")
{
    const CFExpansion r2 = cf_expand(QuadField(2), CFKind::SqrtN);
    CHECK(r2.a0 == 1);
    CHECK(r2.period == ints({2}));
    const CFExpansion r7 = cf_expand(QuadField(7), CFKind::SqrtN);
    CHECK(r7.a0 == 2);
    CHECK(r7.period == ints({1, 1, 1, 4}));
    const CFExpansion w5 = cf_expand(QuadField(5), CFKind::Omega);
    CHECK(w5.a0 == 1);
    CHECK(w5.period == ints({1}));
    CHECK(cf_expand(QuadField(19), CFKind::SqrtN).period == ints({2, 1, 3, 1, 2, 8}));
    CHECK_THROWS_AS(cf_expand(QuadField(7), CFKind::Omega), Error);
}

TEST_CASE("fundamental units")
{
    const FundamentalUnit e19 = fundamental_unit(QuadField(19));
    CHECK(e19.t == 340);
    CHECK(e19.u == 78);
    CHECK(e19.unit_norm == 1);
    const FundamentalUnit e13 = fundamental_unit(QuadField(13));
    CHECK(e13.t == 3);
    CHECK(e13.u == 1);
    CHECK(e13.unit_norm == -1);
    const FundamentalUnit big = fundamental_unit(QuadField(2593));
    CHECK(big.t == 2 * Integer("229004858046909225648456"));
    CHECK(big.u == 2 * Integer("4497212789358213431953"));
    CHECK(big.unit_norm == -1);
    CHECK_THROWS_AS(fundamental_unit(QuadField(-5)), Error);
}

TEST_CASE("unit table matches the transcription")
{
    const auto rows = qdn::testing::fixture_rows("figure1_units.tsv");
    REQUIRE(rows.size() == 34);
    for (const auto& r : rows) {
        const FundamentalUnit e = fundamental_unit(QuadField(std::stoll(r[0])));
        CHECK(to_string(e.t) == r[1]);
        CHECK(to_string(e.u) == r[2]);
    }
    CHECK(tables::format_unit_table(tables::unit_table()) == qdn::testing::read_fixture("figure1_units.tsv"));
}

TEST_CASE("unit powers")
{
    for (std::int64_t n : {2, 3, 5, 21, 46}) {
        const FundamentalUnit e = fundamental_unit(QuadField(n));
        const QuadInt one = QuadInt::from_integer(e.field, 1);
        CHECK(unit_power(e, 0) == one);
        CHECK(unit_power(e, -1) * e.value == one);
        CHECK(unit_power(e, -3) * unit_power(e, 5) == unit_power(e, 2));
        CHECK(unit_power(e, 4) == e.value.pow(4));
    }
}

TEST_CASE("negative Pell")
{
    CHECK(negative_pell_solvable(QuadField(10)));
    CHECK_FALSE(negative_pell_solvable(QuadField(34)));
    CHECK_FALSE(negative_pell_solvable(QuadField(3)));
}

TEST_CASE("Pell witnesses")
{
    const auto w3 = pell_witness_search(QuadField(3), 10);
    REQUIRE(w3.has_value());
    CHECK(w3->kappa == 6);
    CHECK(w3->n == 1);
    CHECK_FALSE(pell_witness_search(QuadField(5), 50).has_value());

    const auto w7 = pell_witness_search(QuadField(7), 10);
    REQUIRE(w7.has_value());
    const Integer k = w7->kappa, n = w7->n;
    const Integer inner = k * n * n - 4;
    CHECK(inner > 0);
    CHECK_FALSE(is_perfect_square(inner));
    CHECK(squarefree_part(k * inner) == 7);

    // The slow path beyond the sieve agrees with the fast one.
    const auto slow = pell_witness_search(QuadField(7), Integer(2'000'000));
    REQUIRE(slow.has_value());
    CHECK(slow->kappa == w7->kappa);
    CHECK(slow->n == w7->n);
}

TEST_CASE("unit memo is safe across threads")
{
    std::vector<std::future<Integer>> futures;
    for (int i = 0; i < 8; ++i) {
        futures.push_back(std::async(std::launch::async, [i] {
            Integer sum = 0;
            for (std::int64_t n : qdn::testing::squarefree_range(2, 300)) {
                if ((n + i) % 2 == 0) sum += fundamental_unit(QuadField(n)).t;
            }
            return sum;
        }));
    }
    for (auto& f : futures) CHECK(f.get() > 0);
}
