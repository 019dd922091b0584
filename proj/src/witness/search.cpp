#include <algorithm>
#include <stdexcept>

#include "lamsol/witness.hpp"

namespace lamsol {

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::ShortcutEq1:
      return "shortcut";
    case Certificate::FullTree:
      return "full";
  }
  return "?";
}

std::string to_string(const RangeMode& mode) {
  return (mode.kind == RangeKind::Linear ? "a1 bound=" : "pp bound=") + std::to_string(mode.bound);
}

u128 shortcut_bound(u64 p, unsigned a) {
  constexpr u128 kSaturated = u128{1} << 127;
  u128 v = 1;
  for (unsigned i = 0; i < 2 * a + 1; ++i) {
    if (v > kSaturated / p) return kSaturated;
    v *= p;
  }
  return v;
}

u64 SearchPolicy::limit_for(u64 p, unsigned a) const {
  if (extended_limit) return *extended_limit;
  const u128 below = shortcut_bound(p, a) - 1;
  return static_cast<u64>(std::min<u128>(below, cap));
}

std::optional<WitnessRecord> find_witness(u64 p, unsigned a, u64 search_limit, FCache& cache) {
  require_input_range(p, "find_witness");
  require_input_range(search_limit, "find_witness");
  if (a == 0) throw std::invalid_argument("find_witness: exponent must be at least 1");
  if (!is_prime(p)) throw std::invalid_argument("find_witness: " + std::to_string(p) + " is not prime");
  u128 pa = 1;
  for (unsigned i = 0; i < a; ++i) {
    pa *= p;
    if (pa >= kInputLimit) throw std::out_of_range("find_witness: p^a is not below 2^63");
  }
  if (search_limit < pa + 1) return std::nullopt;

  const u64 step = static_cast<u64>(pa);
  const u128 shortcut = shortcut_bound(p, a);
  const u128 next_power = pa * p;  // p^(a+1); fits since pa < 2^63
  for (u64 k = 1;; ++k) {
    if (k % p == 0) continue;  // p^(a+1) would divide q - 1
    const u128 q = static_cast<u128>(k) * step + 1;
    if (q > search_limit) return std::nullopt;
    const u64 candidate = static_cast<u64>(q);
    if (!is_prime(candidate)) continue;
    if (q < shortcut) return WitnessRecord{p, a, candidate, Certificate::ShortcutEq1, std::nullopt};
    const u64 f = f_of(candidate, cache);
    if (f < next_power) return WitnessRecord{p, a, candidate, Certificate::FullTree, f};
  }
}

std::optional<WitnessRecord> find_witness(u64 p, unsigned a, u64 search_limit) {
  FCache local;
  return find_witness(p, a, search_limit, local);
}

std::vector<PrimePower> prime_powers_in(const RangeMode& mode) {
  require_input_range(mode.bound, "prime_powers_in");
  std::vector<PrimePower> out;
  if (mode.kind == RangeKind::Linear) {
    if (mode.bound < 2) return out;
    const PrimeSieve sieve(mode.bound);
    for (u64 p : sieve.primes(2, mode.bound)) out.push_back({p, 1});
    return out;
  }
  if (mode.bound < 4) return out;
  const PrimeSieve sieve(std::max<u64>(2, integer_root(mode.bound, 2)));
  for (u64 p : sieve.primes(2, sieve.limit())) {
    u128 v = static_cast<u128>(p) * p;
    for (unsigned a = 2; v <= mode.bound; ++a, v *= p) out.push_back({p, a});
  }
  return out;
}

}  // namespace lamsol
