#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

#include "lamsol/bounds.hpp"

namespace lamsol {

namespace {

constexpr double kHypothesisY = 1e10;

// Counts primes q in `primes` satisfying pred, split across workers. The
// shared cache tolerates racing inserts of equal values.
u64 parallel_count(const std::vector<u64>& primes, unsigned workers, const std::function<bool(u64)>& pred) {
  const std::size_t n = primes.size();
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, n)));
  std::vector<u64> partial(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned t) {
    try {
      for (std::size_t i = t; i < n; i += workers)
        if (pred(primes[i])) ++partial[t];
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(run, t);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  u64 total = 0;
  for (u64 c : partial) total += c;
  return total;
}

void require_within(u64 x, const PrimeSieve& sieve, const char* what) {
  if (x > sieve.limit())
    throw std::out_of_range(std::string(what) + ": x = " + std::to_string(x) + " exceeds sieve limit " +
                            std::to_string(sieve.limit()));
}

}  // namespace

CensusReport census_f_ge(u64 x, u64 y, double eps, double C, const PrimeSieve& sieve, FCache& cache,
                         const CensusOptions& options) {
  require_within(x, sieve, "census_f_ge");
  if (y < 2) throw std::invalid_argument("census_f_ge: y must be at least 2");

  CensusReport report;
  report.x = x;
  report.y = y;
  report.eps = eps;
  report.C = C;
  report.c_eps = compute_c_eps(eps, C);
  const double xd = static_cast<double>(x);
  const double yd = static_cast<double>(y);
  report.bound = report.c_eps * std::pow(xd, 1 + eps) / (std::pow(yd, 0.5 + eps) * std::log(yd));
  report.in_hypothesis = yd >= kHypothesisY;

  u64 pa = 1;
  if (options.unitary_filter) {
    const auto [p, a] = *options.unitary_filter;
    if (a == 0 || !is_prime(p)) throw std::invalid_argument("census_f_ge: filter must be a prime power");
    pa = options.unitary_filter->value();
    report.filter = options.unitary_filter;
    const double pd = static_cast<double>(p);
    const double next = std::pow(pd, a + 1.0);
    report.filtered_bound = xd / (std::pow(pd, (3.0 * a + 1) / 2) * std::log(next)) *
                            (2.86 + report.c_eps * (1 + 1 / eps) * std::pow(xd, eps) / std::pow(pd, (2.0 * a + 1) * eps));
    report.filtered_in_hypothesis = next >= kHypothesisY;
  }

  const auto primes = sieve.primes(2, x);
  const std::optional<PrimePower> filter = options.unitary_filter;
  report.count = parallel_count(primes, options.workers, [&](u64 q) {
    if (filter && ((q - 1) % pa != 0 || ((q - 1) / pa) % filter->p == 0)) return false;
    return f_of(q, cache) >= y;
  });
  return report;
}

u64 census_f_equal(u64 x, u64 v, const PrimeSieve& sieve, FCache& cache, unsigned workers) {
  require_within(x, sieve, "census_f_equal");
  if (v < 1) throw std::invalid_argument("census_f_equal: v must be at least 1");
  const auto primes = sieve.primes(2, x);
  return parallel_count(primes, workers, [&](u64 q) { return f_of(q, cache) == v; });
}

}  // namespace lamsol
