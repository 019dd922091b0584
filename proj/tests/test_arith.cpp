#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lamsol/arith.hpp"
#include "oracles.hpp"

using namespace lamsol;

TEST_CASE("is_prime on small and named values") {
  CHECK(is_prime(149));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK(is_prime(2305843009213693951ULL));
  CHECK_FALSE(is_prime(2305843009213693953ULL));
  // strong pseudoprimes to several small bases
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(561));
}

TEST_CASE("is_prime agrees with trial division below 200000") {
  for (u64 n = 0; n < 200000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("inputs at or above 2^63 are rejected") {
  CHECK_THROWS_AS(is_prime(kInputLimit), std::out_of_range);
  CHECK_THROWS_AS(factorize(kInputLimit + 5), std::out_of_range);
  CHECK_NOTHROW(is_prime(kInputLimit - 1));
}

TEST_CASE("factorize examples") {
  CHECK(factorize(148) == Factorization{{2, 2}, {37, 1}});
  CHECK(factorize(36) == Factorization{{2, 2}, {3, 2}});
  CHECK(factorize(1).empty());
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK(factorize(2305843009213693951ULL) == Factorization{{2305843009213693951ULL, 1}});
  // two primes above the trial bound
  CHECK(factorize(1000003ULL * 1000033ULL) == Factorization{{1000003, 1}, {1000033, 1}});
  CHECK(factorize(1000003ULL * 1000003ULL * 1000003ULL) == Factorization{{1000003, 3}});
}

TEST_CASE("factorize reconstructs, is sorted, and is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> pick(1, kInputLimit - 1);
  for (int i = 0; i < 400; ++i) {
    const u64 n = i < 200 ? pick(rng) : pick(rng) % 100000000 + 1;
    const auto f = factorize(n);
    REQUIRE(expand(f) == n);
    for (std::size_t j = 0; j < f.size(); ++j) {
      REQUIRE(is_prime(f[j].p));
      REQUIRE(f[j].a >= 1);
      if (j) REQUIRE(f[j - 1].p < f[j].p);
    }
    REQUIRE(factorize(expand(f)) == f);
  }
}

TEST_CASE("factorize does not depend on the seed") {
  const u64 n = 4611686014132420609ULL;  // (2^31 - 1)^2
  const auto base = factorize(n, 1);
  CHECK(base == Factorization{{2147483647, 2}});
  for (u64 seed : {2ULL, 99ULL, 0xdeadbeefULL}) CHECK(factorize(n, seed) == base);
  const u64 m = 999999000001ULL * 7ULL;
  CHECK(factorize(m, 3) == factorize(m, 11));
}

TEST_CASE("PrimePower value and overflow") {
  CHECK(PrimePower{3, 2}.value() == 9);
  CHECK(PrimePower{2, 63}.value() == (u64{1} << 63));
  CHECK_THROWS_AS((PrimePower{2, 64}.value()), std::overflow_error);
  CHECK(to_string(PrimePower{3, 2}) == "3^2");
  CHECK(to_string(PrimePower{37, 1}) == "37");
}

TEST_CASE("integer_root is exact") {
  CHECK(integer_root(10000000000ULL, 2) == 100000);
  CHECK(integer_root(9999999999ULL, 2) == 99999);
  CHECK(integer_root(10000000000ULL, 10) == 10);
  CHECK(integer_root(10000000000ULL, 33) == 2);
  CHECK(integer_root(10000000000ULL, 34) == 1);
  CHECK(integer_root(~u64{0}, 2) == 4294967295ULL);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng() >> (rng() % 60);
    const unsigned k = 2 + rng() % 8;
    const u64 r = integer_root(n, k);
    const long double lo = std::pow(static_cast<long double>(r), k);
    const long double hi = std::pow(static_cast<long double>(r + 1), k);
    REQUIRE(lo <= static_cast<long double>(n));
    REQUIRE(hi > static_cast<long double>(n));
  }
}

TEST_CASE("PrimeSieve membership and counts") {
  const PrimeSieve sieve(100000);
  CHECK_FALSE(sieve.is_prime(0));
  CHECK_FALSE(sieve.is_prime(1));
  for (u64 n = 0; n <= 100000; ++n) REQUIRE(sieve.is_prime(n) == oracle::is_prime(n));
  CHECK(PrimeSieve(10).primes(0, 10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(PrimeSieve(17).count(17) == 7);
  CHECK(sieve.count(10) == 4);
  CHECK(sieve.count(100) == 25);
  CHECK(sieve.count(1) == 0);
  CHECK(sieve.count(2) == 1);
  const auto all = oracle::primes_upto(100000);
  CHECK(sieve.count(100000) == all.size());
  CHECK(sieve.primes(0, 100000) == all);
  CHECK(sieve.next_prime(2) == 3);
  CHECK(sieve.next_prime(0) == 2);
  CHECK(sieve.next_prime(89) == 97);
  CHECK_THROWS_AS(sieve.count(100001), std::out_of_range);
}

TEST_CASE("prime counts agree with brute force at every x") {
  const PrimeSieve sieve(30000);
  u64 running = 0;
  for (u64 x = 0; x <= 30000; ++x) {
    if (oracle::is_prime(x)) ++running;
    REQUIRE(prime_count(x, sieve) == running);
  }
}

TEST_CASE("prime_count spans several segments") {
  const PrimeSieve sieve(10000000);
  CHECK(prime_count(1000000, sieve) == 78498);
  CHECK(prime_count(10000000, sieve) == 664579);
  CHECK(prime_count(4194303, sieve) == 295947);
}

TEST_CASE("sieve memory budget") {
  SieveOptions tight;
  tight.memory_budget_bytes = 1024;
  CHECK_THROWS_AS(PrimeSieve(1000000, tight), std::length_error);
  CHECK(PrimeSieve::bytes_needed(1000) < 1024);
}

TEST_CASE("carmichael_lambda examples") {
  CHECK(carmichael_lambda(8) == 2);
  CHECK(carmichael_lambda(4) == 2);
  CHECK(carmichael_lambda(16) == 4);
  CHECK(carmichael_lambda(1) == 1);
  CHECK(carmichael_lambda(15) == 4);
  CHECK(carmichael_lambda(561) == 80);
  CHECK_THROWS_AS(carmichael_lambda(0), std::invalid_argument);
}

TEST_CASE("carmichael_lambda matches the largest unit order") {
  for (u64 n = 1; n <= 2000; ++n) REQUIRE(carmichael_lambda(n) == oracle::lambda(n));
}

TEST_CASE("multiplicative_order") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(1, 12) == 1);
  CHECK(multiplicative_order(3, 10) == 4);
  CHECK_THROWS_AS(multiplicative_order(4, 12), std::invalid_argument);
  for (u64 n = 2; n <= 300; ++n)
    for (u64 a = 1; a < n; ++a)
      if (std::gcd(a, n) == 1) {
        const u64 k = multiplicative_order(a, n);
        REQUIRE(k == oracle::order(a, n));
        REQUIRE(carmichael_lambda(n) % k == 0);
      }
}

TEST_CASE("count_proper_prime_powers") {
  const PrimeSieve sieve(100000);
  CHECK(count_proper_prime_powers(3, sieve) == 0);
  CHECK(count_proper_prime_powers(4, sieve) == 1);
  CHECK(count_proper_prime_powers(100, sieve) == 10);
  CHECK(count_proper_prime_powers(10000000000ULL, sieve) == 10084);
  u64 running = 0;
  for (u64 t = 1; t <= 100000; ++t) {
    const auto f = factorize(t);
    if (f.size() == 1 && f[0].a >= 2) ++running;
    if (t % 97 == 0 || t < 200) REQUIRE(count_proper_prime_powers(t, sieve) == running);
  }
  CHECK_THROWS_AS(count_proper_prime_powers(100000ULL * 100000ULL * 4, sieve), std::out_of_range);
}
