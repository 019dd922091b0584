#pragma once

// Bootstrap for a hypothetical least n0 with no m != n0 sharing lambda(n0).
// Known: 2^4 | n0, so 4 | lambda(n0); and any prime p with (p - 1) | lambda(n0)
// has p^2 | n0, which adds p (p - 1) = lambda(p^2) to lambda(n0). Iterating
// this forces more and more primes to divide n0 squared.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lamsol/arith.hpp"
#include "lamsol/witness.hpp"

namespace lamsol {

struct ClosureState {
  std::set<u64> forced{2};
  // Prime -> exponent of the largest D known to divide lambda(n0).
  std::map<u64, unsigned> lambda_divisor{{2, 2}};
  unsigned iteration = 0;

  /// Raises D to cover lambda(p^2) = p (p - 1) for a newly forced p.
  void absorb(u64 p);
  bool divides_lambda(const Factorization& f) const;
};

/// (p - 1) | D. Throws std::invalid_argument when p is not prime.
bool is_forced(u64 p, const ClosureState& state);

enum class ScanOrder { Ascending, Shuffled };

struct ClosureOptions {
  unsigned max_iters = 64;
  ScanOrder order = ScanOrder::Ascending;
  u64 shuffle_seed = 1;
};

struct ClosureReport {
  u64 bound = 0;
  std::vector<std::vector<u64>> added;  // per round, ascending
  std::set<u64> forced;
  std::map<u64, unsigned> lambda_divisor;
  u64 primes_below_bound = 0;
  bool saturated = false;
  bool fixpoint = false;  // stopped because a round added nothing
  unsigned iterations = 0;
};

/// Rounds use the divisor D as it stood when the round began.
ClosureReport run_closure(u64 prime_bound, const ClosureOptions& options = {});

/// Replays the rounds from the seed and checks each added p against D.
bool audit_closure(const ClosureReport& report);

/// Smallest prime power that does not divide D.
PrimePower smallest_missing_prime_power(const ClosureState& state);

// The contradiction step that turns a witness for p^a into p^(a+1) | lambda(n0),
// evaluated against a closure result. Informational only.
struct WitnessStep {
  PrimePower target;               // p^a
  PrimePower smallest_missing;     // smallest prime power not dividing D
  bool next_power_is_smallest_missing = false;  // p^(a+1) == smallest_missing
  std::optional<WitnessRecord> witness;
  bool applies = false;
};

WitnessStep check_witness_step(const ClosureReport& report, PrimePower target);

}  // namespace lamsol
