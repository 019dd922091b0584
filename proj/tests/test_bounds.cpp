#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lamsol/bounds.hpp"
#include "lamsol/pratt.hpp"
#include "oracles.hpp"

using namespace lamsol;

TEST_CASE("hurwitz_zeta reference values") {
  CHECK(hurwitz_zeta(2, 1) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-13));
  CHECK(hurwitz_zeta(3, 1) == doctest::Approx(1.2020569031595942).epsilon(1e-13));
  CHECK(hurwitz_zeta(1.25, 1) == doctest::Approx(4.59511182584294338).epsilon(1e-12));
  CHECK(hurwitz_zeta(1.25, 1.0 / 210) == doctest::Approx(804.004817002895).epsilon(1e-12));
  // zeta(s, 1/2) = (2^s - 1) zeta(s)
  CHECK(hurwitz_zeta(2, 0.5) == doctest::Approx(3 * std::numbers::pi * std::numbers::pi / 6).epsilon(1e-13));
}

TEST_CASE("hurwitz_zeta against direct summation") {
  CHECK(std::abs(hurwitz_zeta(1.25, 1) - oracle::zeta(1.25)) < 1e-9);
  for (double s : {1.1, 1.5, 2.5})
    for (u64 c : {10ULL, 37ULL, 100ULL}) {
      const double got = std::pow(100.0, -s) * hurwitz_zeta(s, c / 100.0);
      CHECK(got == doctest::Approx(oracle::progression_sum(100, s, c)).epsilon(1e-11));
    }
}

TEST_CASE("hurwitz_zeta domain") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2, 1.5), std::invalid_argument);
  CHECK_NOTHROW(hurwitz_zeta(1.01, 1));
}

TEST_CASE("progression matrix shape and entries") {
  const auto m = build_progression_matrix(210, 1.25);
  CHECK(m.dim() == 48);
  for (double v : m.entries) {
    REQUIRE(std::isfinite(v));
    REQUIRE(v > 0);
  }
  const double s = 1.25;
  CHECK(progression_entry(210, s, 2, 1) == doctest::Approx(std::pow(210.0, -s) * hurwitz_zeta(s, 1.0 / 210)));
  CHECK(progression_entry(210, s, 1, 11) == doctest::Approx(std::pow(210.0, -s) * hurwitz_zeta(s, 1.0)));
  CHECK_THROWS_AS(build_progression_matrix(12, 1.25), std::invalid_argument);
  CHECK_THROWS_AS(build_progression_matrix(210, 1.0), std::invalid_argument);
  MatrixOptions small;
  small.max_dimension = 40;
  CHECK_THROWS_AS(build_progression_matrix(210, 1.25, small), std::invalid_argument);
}

TEST_CASE("matrix entries follow the residue identity") {
  const auto m = build_progression_matrix(30, 1.5);
  for (std::size_t row = 0; row < m.dim(); ++row)
    for (std::size_t col = 0; col < m.dim(); ++col) {
      const u64 b = m.units[row];
      const u64 a = m.units[col];
      u64 c = 0;
      for (u64 k = 0; k < 30; ++k)
        if ((a * k) % 30 == (b + 29) % 30) c = k;
      if (c == 0) c = 30;
      REQUIRE(m.at(row, col) == doctest::Approx(std::pow(30.0, -1.5) * hurwitz_zeta(1.5, c / 30.0)).epsilon(1e-14));
    }
}

TEST_CASE("spectral radius") {
  const std::vector<double> half{0.5};
  CHECK(spectral_radius(half, 1) == doctest::Approx(0.5));
  const std::vector<double> m2{0.1, 0.4, 0.2, 0.3};  // eigenvalues 0.5 and -0.1
  CHECK(spectral_radius(m2, 2) == doctest::Approx(0.5).epsilon(1e-10));
  const auto m = build_progression_matrix(210, 1.25);
  CHECK(spectral_radius(m) == doctest::Approx(0.8184775745368204).epsilon(1e-9));
  const auto w2 = build_progression_matrix(2, 1.25);
  CHECK(w2.dim() == 1);
  CHECK(spectral_radius(w2) == doctest::Approx(1.932006531).epsilon(1e-8));
}

TEST_CASE("inverse column sums against a Neumann series") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pick(0.0, 0.12);
  const std::size_t n = 6;
  std::vector<double> m(n * n);
  for (auto& v : m) v = pick(rng);
  const auto inv = inverse_column_sums(m, n);
  // sum of M^k, k = 0..200
  std::vector<double> power(n * n, 0), total(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1;
  for (int k = 0; k < 200; ++k) {
    for (std::size_t i = 0; i < n * n; ++i) total[i] += power[i];
    std::vector<double> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i * n + j] += power[i * n + l] * m[l * n + j];
    power = next;
  }
  double largest = 0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0;
    for (std::size_t i = 0; i < n; ++i) col += total[i * n + j];
    CHECK(inv.sums[j] == doctest::Approx(col).epsilon(1e-12));
    largest = std::max(largest, col);
  }
  CHECK(inv.largest == doctest::Approx(largest).epsilon(1e-12));
  CHECK(inv.residual <= 1e-12);
  const std::vector<double> diag{0.5, 0, 0, 0.25};
  const auto d = inverse_column_sums(diag, 2);
  CHECK(d.sums[0] == doctest::Approx(2.0));
  CHECK(d.sums[1] == doctest::Approx(4.0 / 3));
}

TEST_CASE("C(eps) and c(eps)") {
  const auto r = compute_C_eps(210, 1.25);
  CHECK(r.dimension == 48);
  CHECK(r.spectral_radius < 1);
  CHECK(r.C == doctest::Approx(7.3669272516465725).epsilon(1e-9));
  CHECK(r.C <= 7.37);
  CHECK(r.residual <= 1e-9);
  CHECK_THROWS_AS(compute_C_eps(2, 1.25), NotConvergent);
  try {
    compute_C_eps(2, 1.25);
  } catch (const NotConvergent& e) {
    CHECK(e.spectral_radius() == doctest::Approx(1.932006531).epsilon(1e-8));
  }
  const double c = compute_c_eps(0.25, 7.37);
  CHECK(c == doctest::Approx(21.90291503008497).epsilon(1e-10));
  CHECK(c <= 22);
  CHECK(compute_c_eps(0.25, 0) == 0);
  CHECK(compute_c_eps(0.25, 2 * 7.37) == doctest::Approx(2 * c));
  CHECK_THROWS_AS(compute_c_eps(0, 1), std::invalid_argument);
}

TEST_CASE("matrix dump") {
  std::ostringstream out;
  write_matrix(out, build_progression_matrix(6, 2));
  CHECK(!out.str().empty());
}

TEST_CASE("chain examples") {
  const PrimeSieve sieve(100000);
  const auto r = enumerate_chains(2, 10, sieve);
  CHECK(r.count == 5);
  CHECK(r.max_length == 3);
  CHECK(enumerate_chains(7, 7, sieve).count == 1);
  CHECK(enumerate_chains(11, 10, sieve).count == 0);
  CHECK_THROWS_AS(enumerate_chains(9, 10, sieve), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_chains(2, 200000, sieve), std::out_of_range);
}

TEST_CASE("chains agree with a naive search and stay within bounds") {
  const PrimeSieve sieve(3000);
  for (u64 p : oracle::primes_upto(60))
    for (u64 x : {10ULL, 100ULL, 700ULL, 3000ULL}) {
      const auto r = enumerate_chains(p, x, sieve);
      REQUIRE(r.count == oracle::chain_count(p, x));
      if (p <= x) REQUIRE(r.count >= 1);
      REQUIRE(r.bound == doctest::Approx(7.37 * std::pow(static_cast<double>(x) / p, 1.25)));
    }
}

TEST_CASE("census examples") {
  const PrimeSieve sieve(1000);
  FCache cache;
  CHECK(census_f_ge(30, 4, 0.25, 7.37, sieve, cache).count == 7);
  CHECK(census_f_ge(30, 2, 0.25, 7.37, sieve, cache).count == 7);
  CHECK(census_f_ge(2, 2, 0.25, 7.37, sieve, cache).count == 0);
  CHECK(census_f_equal(30, 4, sieve, cache) == 5);
  CHECK(census_f_equal(50, 1, sieve, cache) == 4);
  CHECK(census_f_equal(1, 1, sieve, cache) == 0);
  const auto r = census_f_ge(1000, 9, 0.25, 7.37, sieve, cache);
  CHECK_FALSE(r.in_hypothesis);
  CHECK(r.c_eps == doctest::Approx(compute_c_eps(0.25, 7.37)));
  CHECK(r.bound == doctest::Approx(r.c_eps * std::pow(1000.0, 1.25) / (std::pow(9.0, 0.75) * std::log(9.0))));
}

TEST_CASE("census agrees with the recursive definition") {
  const PrimeSieve sieve(20000);
  FCache cache;
  const auto primes = oracle::primes_upto(20000);
  for (u64 y : {2ULL, 4ULL, 9ULL, 16ULL, 100ULL}) {
    u64 ge = 0, eq = 0;
    for (u64 q : primes) {
      ge += oracle::f(q) >= y;
      eq += oracle::f(q) == y;
    }
    CensusOptions opts;
    opts.workers = 3;
    const auto report = census_f_ge(20000, y, 0.25, 7.37, sieve, cache, opts);
    CHECK(report.count == ge);
    CHECK(report.count <= primes.size());
    CHECK(census_f_equal(20000, y, sieve, cache, 2) == eq);
  }
}

TEST_CASE("census with a unitary filter") {
  const PrimeSieve sieve(20000);
  FCache cache;
  CensusOptions opts;
  opts.unitary_filter = PrimePower{3, 2};
  const auto r = census_f_ge(20000, 16, 0.25, 7.37, sieve, cache, opts);
  u64 expected = 0;
  for (u64 q : oracle::primes_upto(20000))
    if ((q - 1) % 9 == 0 && (q - 1) % 27 != 0 && oracle::f(q) >= 16) ++expected;
  CHECK(r.count == expected);
  REQUIRE(r.filter.has_value());
  CHECK(r.filtered_bound.has_value());
  CHECK_FALSE(r.filtered_in_hypothesis);
}

TEST_CASE("log_integral") {
  CHECK(log_integral(2) == 0);
  CHECK(log_integral(1e6) == doctest::Approx(78626.5039956820644).epsilon(1e-11));
  CHECK(log_integral(1e5) == doctest::Approx(9628.76383727068).epsilon(1e-11));
  for (double x : {3.0, 10.0, 1234.5, 1e4, 5e7, 1e9})
    CHECK(log_integral(x) == doctest::Approx(oracle::li_from_2(x)).epsilon(1e-10));
  CHECK_THROWS_AS(log_integral(1.5), std::invalid_argument);
}

TEST_CASE("ERH checker") {
  const PrimeSieve sieve(1000000);
  const auto r = check_erh_bound(100, 3, 1, sieve);
  CHECK(r.pi_xmb == 11);
  CHECK(r.main_term == doctest::Approx(log_integral(100) / 2));
  CHECK(r.error_bound == doctest::Approx(10 * std::log(900.0)));
  CHECK(check_erh_bound(1000000, 4, 1, sieve).holds);
  CHECK_THROWS_AS(check_erh_bound(100, 1, 0, sieve), std::invalid_argument);
  CHECK_THROWS_AS(check_erh_bound(100, 4, 2, sieve), std::invalid_argument);
  u64 direct = 0;
  for (u64 q : oracle::primes_upto(10000)) direct += q % 7 == 3;
  CHECK(check_erh_bound(10000, 7, 3, sieve).pi_xmb == direct);
}
