#include <doctest.h>

#include "properties.hpp"

using namespace qdn::testing;

namespace {

void require(const Tally& t)
{
    INFO(t.first_failure);
    CHECK(t.checked > 0);
    CHECK(t.failed == 0);
}

} // namespace

TEST_CASE("canonical factorization round trip") { require(factor_round_trip(2, 97, 60)); }

TEST_CASE("membership criteria agree") { require(criterion_equivalence(2, 97, 200)); }

TEST_CASE("d-numbers are closed under products") { require(monoid_closure(2, 60, 40)); }

TEST_CASE("divisibility filter never rejects a divisor") { require(divisibility_agrees(2, 40, 25)); }

TEST_CASE("enumeration agrees with the coordinate oracle") { require(oracle_equivalence(50, {1, 4, 9})); }

TEST_CASE("quantum integer recurrence") { require(quantum_integers(50, 12)); }

TEST_CASE("units, negative Pell and period parity") { require(units_and_pell(200)); }

TEST_CASE("Pell witnesses exist exactly for norm +1") { require(pell_witnesses(100, 10'000)); }

TEST_CASE("enumeration bound and monotonicity") { require(enumeration_invariants(6)); }

TEST_CASE("squarefree decomposition") { require(squarefree_round_trip(200)); }
