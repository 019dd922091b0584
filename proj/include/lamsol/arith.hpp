#pragma once

// Integer primitives: primality, factorization, sieving, Carmichael's lambda
// and prime / prime-power counting. Public inputs are limited to [0, 2^63).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lamsol {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Exclusive upper limit for every public integer argument.
inline constexpr u64 kInputLimit = u64{1} << 63;

/// Fixed seed for the randomized splitting step of factorize().
inline constexpr u64 kDefaultFactorSeed = 0x9e3779b97f4a7c15ULL;

/// p^a with p prime and a >= 1.
struct PrimePower {
  u64 p = 0;
  unsigned a = 0;

  u64 value() const;
  bool proper() const { return a >= 2; }

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// "p" when a == 1, otherwise "p^a".
std::string to_string(const PrimePower& pp);

/// Prime-power factors with strictly increasing bases. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Throws std::out_of_range unless n < 2^63.
void require_input_range(u64 n, const char* what);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic for every n < 2^63.
bool is_prime(u64 n);

/// Seed used by factorize(n); starts at kDefaultFactorSeed.
u64 factor_seed();
void set_factor_seed(u64 seed);

Factorization factorize(u64 n);
Factorization factorize(u64 n, u64 seed);

/// Product of p^a over the factorization. Throws std::overflow_error when the
/// product does not fit in 64 bits.
u64 expand(const Factorization& f);

/// floor(n^(1/k)) computed exactly with integer Newton iteration.
u64 integer_root(u64 n, unsigned k);

u64 euler_phi(u64 n);
u64 carmichael_lambda(u64 n);

/// Least e >= 1 with a^e = 1 (mod n). Throws std::invalid_argument when
/// gcd(a, n) > 1.
u64 multiplicative_order(u64 a, u64 n);

struct SieveOptions {
  // One bit per odd number plus a small rank index.
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

/// Primality table for [0, limit], immutable once built.
class PrimeSieve {
 public:
  explicit PrimeSieve(u64 limit, SieveOptions options = {});

  u64 limit() const { return limit_; }
  bool is_prime(u64 n) const;

  /// pi(x); throws std::out_of_range when x > limit().
  u64 count(u64 x) const;

  /// All primes in [lo, hi], hi clamped to limit().
  std::vector<u64> primes(u64 lo, u64 hi) const;

  /// Smallest prime > n, or 0 when none exists within the table.
  u64 next_prime(u64 n) const;

  static std::size_t bytes_needed(u64 limit);

 private:
  bool odd_bit(u64 n) const {
    const u64 i = n >> 1;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }

  u64 limit_;
  std::vector<u64> bits_;       // bit i <-> 2i + 1
  std::vector<u64> block_rank_; // odd primes below word 8j
};

PrimeSieve sieve_primes(u64 limit, SieveOptions options = {});

u64 prime_count(u64 x, const PrimeSieve& sieve);

/// S(t): the number of p^a <= t with a >= 2. Needs sieve.limit() >= sqrt(t).
u64 count_proper_prime_powers(u64 t, const PrimeSieve& sieve);

}  // namespace lamsol
