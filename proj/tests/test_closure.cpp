#include <set>
#include <stdexcept>

#include "doctest.h"
#include "lamsol/closure.hpp"
#include "oracles.hpp"

using namespace lamsol;

TEST_CASE("seed state") {
  const ClosureState state;
  CHECK(state.forced == std::set<u64>{2});
  CHECK(state.lambda_divisor.at(2) == 2);
  CHECK(is_forced(3, state));
  CHECK(is_forced(5, state));
  CHECK_FALSE(is_forced(7, state));
  CHECK_THROWS_AS(is_forced(9, state), std::invalid_argument);
  CHECK(smallest_missing_prime_power(state) == PrimePower{3, 1});
}

TEST_CASE("61 is forced once 3 and 5 are") {
  ClosureState state;
  state.absorb(3);
  state.absorb(5);
  CHECK(is_forced(61, state));
  CHECK(is_forced(7, state));
  CHECK_FALSE(is_forced(17, state));
  CHECK(smallest_missing_prime_power(state) == PrimePower{7, 1});
  state.absorb(7);
  CHECK(smallest_missing_prime_power(state) == PrimePower{2, 3});
}

TEST_CASE("first two rounds") {
  const auto six = run_closure(6);
  REQUIRE(!six.added.empty());
  CHECK(six.added[0] == std::vector<u64>{3, 5});
  const auto hundred = run_closure(100);
  REQUIRE(hundred.added.size() >= 2);
  CHECK(hundred.added[0] == std::vector<u64>{3, 5});
  CHECK(hundred.added[1] == std::vector<u64>{7, 11, 13, 31, 61});
}

TEST_CASE("bound 2 keeps only the seed") {
  const auto r = run_closure(2);
  CHECK(r.forced == std::set<u64>{2});
  CHECK(r.saturated);
  CHECK(r.added.empty());
  CHECK(r.primes_below_bound == 1);
}

TEST_CASE("rounds are disjoint and cover the forced set") {
  for (u64 bound : {100ULL, 1000ULL, 10000ULL, 50000ULL}) {
    const auto r = run_closure(bound);
    std::set<u64> seen{2};
    for (const auto& round : r.added)
      for (u64 p : round) REQUIRE(seen.insert(p).second);
    CHECK(seen == r.forced);
    CHECK(audit_closure(r));
    CHECK(r.lambda_divisor.at(2) >= 2);
    CHECK(r.fixpoint);
  }
}

TEST_CASE("rounds agree with a naive closure") {
  for (u64 bound : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
    const auto r = run_closure(bound);
    CHECK(r.added == oracle::closure_rounds(bound));
  }
}

TEST_CASE("scan order does not matter") {
  ClosureOptions shuffled;
  shuffled.order = ScanOrder::Shuffled;
  shuffled.shuffle_seed = 42;
  const auto a = run_closure(20000);
  const auto b = run_closure(20000, shuffled);
  CHECK(a.added == b.added);
  CHECK(a.forced == b.forced);
  CHECK(a.lambda_divisor == b.lambda_divisor);
}

TEST_CASE("iteration cap") {
  ClosureOptions one;
  one.max_iters = 1;
  const auto r = run_closure(1000, one);
  CHECK(r.added.size() == 1);
  CHECK_FALSE(r.fixpoint);
}

TEST_CASE("tampered reports fail the audit") {
  auto r = run_closure(1000);
  r.forced.insert(17);
  CHECK_FALSE(audit_closure(r));
}

TEST_CASE("witness step") {
  const auto r = run_closure(10000);
  const auto step = check_witness_step(r, {2, 2});
  CHECK(step.smallest_missing == PrimePower{2, 3});
  CHECK(step.next_power_is_smallest_missing);
  REQUIRE(step.witness.has_value());
  CHECK(step.witness->q == 5);
  CHECK(step.applies);
  const auto other = check_witness_step(r, {3, 1});
  CHECK_FALSE(other.next_power_is_smallest_missing);
  CHECK_FALSE(other.applies);
  // the enrichment pass leaves the fixpoint alone
  CHECK(run_closure(10000).forced == r.forced);
}
