#include "lamsol/arith.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace lamsol {

namespace {

// Odd numbers covered by one sieving segment (256 KiB of bits).
constexpr u64 kSegmentOdds = u64{1} << 21;

}  // namespace

std::size_t PrimeSieve::bytes_needed(u64 limit) {
  const u64 words = (limit / 2) / 64 + 1;
  return static_cast<std::size_t>(words * 8 + (words / 8 + 2) * 8);
}

PrimeSieve::PrimeSieve(u64 limit, SieveOptions options) : limit_(limit) {
  require_input_range(limit, "sieve_primes");
  if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be at least 2");
  if (bytes_needed(limit) > options.memory_budget_bytes)
    throw std::length_error("sieve_primes: limit " + std::to_string(limit) + " needs " +
                            std::to_string(bytes_needed(limit)) + " bytes, budget is " +
                            std::to_string(options.memory_budget_bytes));

  const u64 odd_count = limit / 2 + 1;  // odd numbers 1, 3, ..., <= limit (plus slack)
  bits_.assign(odd_count / 64 + 1, ~u64{0});

  // Base primes up to sqrt(limit) by a plain sieve.
  const u64 root = integer_root(limit, 2);
  std::vector<u64> base;
  {
    std::vector<bool> composite(root + 1);
    for (u64 i = 3; i <= root; i += 2) {
      if (composite[i]) continue;
      base.push_back(i);
      for (u64 j = i * i; j <= root; j += 2 * i) composite[j] = true;
    }
  }

  // next[k]: index of the next odd multiple of base[k] still to be crossed out.
  std::vector<u64> next(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) next[k] = (base[k] * base[k]) / 2;

  const u64 total = limit / 2 + 1;
  for (u64 lo = 0; lo < total; lo += kSegmentOdds) {
    const u64 hi = std::min(total, lo + kSegmentOdds);
    for (std::size_t k = 0; k < base.size(); ++k) {
      const u64 p = base[k];
      u64 i = next[k];
      for (; i < hi; i += p) bits_[i >> 6] &= ~(u64{1} << (i & 63));
      next[k] = i;
    }
  }

  bits_[0] &= ~u64{1};  // 1 is not prime
  // Clear everything above limit so that popcounts are exact.
  const u64 last = (limit - 1) / 2;  // index of the largest odd number <= limit
  const u64 keep = last + 1;
  for (u64 w = keep >> 6; w < bits_.size(); ++w) {
    const u64 from = w == (keep >> 6) ? (keep & 63) : 0;
    if (from == 0)
      bits_[w] = 0;
    else
      bits_[w] &= (u64{1} << from) - 1;
  }

  block_rank_.assign(bits_.size() / 8 + 2, 0);
  u64 running = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (w % 8 == 0) block_rank_[w / 8] = running;
    running += std::popcount(bits_[w]);
  }
}

bool PrimeSieve::is_prime(u64 n) const {
  if (n > limit_)
    throw std::out_of_range("PrimeSieve: " + std::to_string(n) + " exceeds sieve limit " +
                            std::to_string(limit_));
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  return odd_bit(n);
}

u64 PrimeSieve::count(u64 x) const {
  if (x > limit_)
    throw std::out_of_range("prime_count: " + std::to_string(x) + " exceeds sieve limit " +
                            std::to_string(limit_));
  if (x < 2) return 0;
  if (x == 2) return 1;
  const u64 idx = (x - 1) / 2;  // largest odd number <= x is 2*idx + 1
  const u64 w = idx >> 6;
  u64 n = block_rank_[w / 8];
  for (u64 j = w & ~u64{7}; j < w; ++j) n += std::popcount(bits_[j]);
  const unsigned bit = idx & 63;
  const u64 mask = bit == 63 ? ~u64{0} : (u64{1} << (bit + 1)) - 1;
  n += std::popcount(bits_[w] & mask);
  return n + 1;  // the prime 2
}

std::vector<u64> PrimeSieve::primes(u64 lo, u64 hi) const {
  std::vector<u64> out;
  hi = std::min(hi, limit_);
  if (hi < 2 || lo > hi) return out;
  if (lo <= 2) out.push_back(2);
  const u64 start = std::max<u64>(lo, 3) / 2;  // index of first odd >= lo (or just below)
  const u64 stop = (hi - 1) / 2;
  for (u64 w = start >> 6; w <= (stop >> 6); ++w) {
    u64 word = bits_[w];
    while (word) {
      const u64 i = (w << 6) + std::countr_zero(word);
      word &= word - 1;
      if (i < start || i > stop) continue;
      const u64 n = 2 * i + 1;
      if (n >= lo) out.push_back(n);
    }
  }
  return out;
}

u64 PrimeSieve::next_prime(u64 n) const {
  if (n < 2) return limit_ >= 2 ? 2 : 0;
  u64 i = n / 2 + (n & 1);  // first odd number > n is 2i + 1
  const u64 stop = (limit_ - 1) / 2;
  while (i <= stop) {
    const u64 w = i >> 6;
    const u64 word = bits_[w] & (~u64{0} << (i & 63));
    if (word) {
      const u64 j = (w << 6) + std::countr_zero(word);
      return j <= stop ? 2 * j + 1 : 0;
    }
    i = (w + 1) << 6;
  }
  return 0;
}

PrimeSieve sieve_primes(u64 limit, SieveOptions options) { return PrimeSieve(limit, options); }

u64 prime_count(u64 x, const PrimeSieve& sieve) { return sieve.count(x); }

u64 count_proper_prime_powers(u64 t, const PrimeSieve& sieve) {
  require_input_range(t, "count_proper_prime_powers");
  if (t < 4) return 0;
  const u64 root = integer_root(t, 2);
  if (root > sieve.limit())
    throw std::out_of_range("count_proper_prime_powers: sqrt(" + std::to_string(t) +
                            ") exceeds sieve limit " + std::to_string(sieve.limit()));
  u64 total = 0;
  for (unsigned k = 2; k < 64 && (u64{1} << k) <= t; ++k) total += sieve.count(integer_root(t, k));
  return total;
}

}  // namespace lamsol
