#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "lamsol/closure.hpp"

namespace lamsol {

void ClosureState::absorb(u64 p) {
  forced.insert(p);
  if (p == 2) return;
  auto& e = lambda_divisor[p];
  e = std::max(e, 1u);
  for (const auto& [r, k] : factorize(p - 1)) {
    auto& er = lambda_divisor[r];
    er = std::max(er, k);
  }
}

bool ClosureState::divides_lambda(const Factorization& f) const {
  return std::all_of(f.begin(), f.end(), [this](const PrimePower& pp) {
    auto it = lambda_divisor.find(pp.p);
    return it != lambda_divisor.end() && it->second >= pp.a;
  });
}

bool is_forced(u64 p, const ClosureState& state) {
  require_input_range(p, "is_forced");
  if (!is_prime(p)) throw std::invalid_argument("is_forced: " + std::to_string(p) + " is not prime");
  return state.divides_lambda(factorize(p - 1));
}

ClosureReport run_closure(u64 prime_bound, const ClosureOptions& options) {
  const PrimeSieve sieve(std::max<u64>(prime_bound, 2));
  std::vector<u64> candidates = sieve.primes(3, prime_bound);
  if (options.order == ScanOrder::Shuffled) {
    std::mt19937_64 rng(options.shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }

  ClosureState state;
  ClosureReport report;
  report.bound = prime_bound;
  while (state.iteration < options.max_iters) {
    std::vector<u64> round;
    for (u64 p : candidates)
      if (!state.forced.contains(p) && is_forced(p, state)) round.push_back(p);
    if (round.empty()) {
      report.fixpoint = true;
      break;
    }
    ++state.iteration;
    std::sort(round.begin(), round.end());
    for (u64 p : round) state.absorb(p);
    report.added.push_back(std::move(round));
  }

  report.iterations = state.iteration;
  report.forced = state.forced;
  report.lambda_divisor = state.lambda_divisor;
  report.primes_below_bound = prime_bound >= 2 ? sieve.count(prime_bound) : 0;
  report.saturated =
      static_cast<u64>(std::count_if(report.forced.begin(), report.forced.end(),
                                     [&](u64 p) { return p <= prime_bound; })) == report.primes_below_bound;
  return report;
}

bool audit_closure(const ClosureReport& report) {
  ClosureState state;
  std::set<u64> seen{2};
  for (const auto& round : report.added) {
    if (round.empty()) return false;
    for (u64 p : round) {
      if (seen.contains(p) || !is_forced(p, state)) return false;
      seen.insert(p);
    }
    for (u64 p : round) state.absorb(p);
  }
  return seen == report.forced && state.lambda_divisor == report.lambda_divisor;
}

PrimePower smallest_missing_prime_power(const ClosureState& state) {
  // The first prime outside D's support bounds the answer from above.
  u64 r = 2;
  while (state.lambda_divisor.contains(r)) {
    ++r;
    while (!is_prime(r)) ++r;
  }
  PrimePower best{r, 1};
  u128 best_value = r;
  for (const auto& [p, e] : state.lambda_divisor) {
    u128 v = 1;
    for (unsigned i = 0; i <= e && v <= best_value; ++i) v *= p;
    if (v < best_value) {
      best = {p, e + 1};
      best_value = v;
    }
  }
  return best;
}

WitnessStep check_witness_step(const ClosureReport& report, PrimePower target) {
  if (target.a == 0 || !is_prime(target.p))
    throw std::invalid_argument("check_witness_step: target must be a prime power");
  ClosureState state;
  state.forced = report.forced;
  state.lambda_divisor = report.lambda_divisor;

  WitnessStep step;
  step.target = target;
  step.smallest_missing = smallest_missing_prime_power(state);
  step.next_power_is_smallest_missing = step.smallest_missing == PrimePower{target.p, target.a + 1};
  const SearchPolicy policy;
  step.witness = find_witness(target.p, target.a, policy.limit_for(target.p, target.a));
  step.applies = step.next_power_is_smallest_missing && step.witness.has_value();
  return step;
}

}  // namespace lamsol
