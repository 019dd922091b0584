#include "lamsol/arith.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lamsol {

namespace {

constexpr u64 kTrialBound = 1'000'000;

std::atomic<u64> g_factor_seed{kDefaultFactorSeed};

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialBound + 1);
    std::vector<u64> out;
    for (u64 i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial divisor of the odd
// composite n, retrying with fresh parameters drawn from rng.
u64 brent_split(u64 n, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> pick(1, n - 1);
  constexpr u64 kBatch = 128;
  for (;;) {
    const u64 c = pick(rng);
    u64 y = pick(rng);
    u64 x = y;
    u64 ys = y;
    u64 g = 1;
    u64 q = 1;
    auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };

    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // The batch overshot; walk it again one step at a time.
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::mt19937_64& rng, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned k : {2u, 3u}) {
    const u64 r = integer_root(n, k);
    u64 pw = 1;
    for (unsigned i = 0; i < k; ++i) pw *= r;
    if (pw == n) {
      for (unsigned i = 0; i < k; ++i) split_into(r, rng, out);
      return;
    }
  }
  const u64 d = brent_split(n, rng);
  split_into(d, rng, out);
  split_into(n / d, rng, out);
}

}  // namespace

u64 PrimePower::value() const {
  u128 v = 1;
  for (unsigned i = 0; i < a; ++i) {
    v *= p;
    if (v > ~u64{0}) throw std::overflow_error("prime power " + to_string(*this) + " exceeds 64 bits");
  }
  return static_cast<u64>(v);
}

std::string to_string(const PrimePower& pp) {
  return pp.a == 1 ? std::to_string(pp.p) : std::to_string(pp.p) + "^" + std::to_string(pp.a);
}

u64 factor_seed() { return g_factor_seed.load(std::memory_order_relaxed); }

void set_factor_seed(u64 seed) { g_factor_seed.store(seed, std::memory_order_relaxed); }

Factorization factorize(u64 n) { return factorize(n, factor_seed()); }

Factorization factorize(u64 n, u64 seed) {
  require_input_range(n, "factorize");
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");

  Factorization out;
  u64 m = n;
  bool checked = false;
  for (u64 p : trial_primes()) {
    if (p * p > m) break;
    if (m % p == 0) {
      unsigned e = 0;
      do {
        m /= p;
        ++e;
      } while (m % p == 0);
      out.push_back({p, e});
      checked = false;
    }
    // Large prime cofactors would otherwise run through the whole table.
    if (p >= 1021 && !checked) {
      if (is_prime(m)) break;
      checked = true;
    }
  }
  if (m == 1) return out;

  std::vector<u64> rest;
  std::mt19937_64 rng(seed ^ n);
  split_into(m, rng, rest);
  std::sort(rest.begin(), rest.end());
  for (u64 r : rest) {
    if (!out.empty() && out.back().p == r)
      ++out.back().a;
    else
      out.push_back({r, 1});
  }
  return out;
}

u64 expand(const Factorization& f) {
  u128 v = 1;
  for (const auto& pp : f) {
    v *= pp.value();
    if (v > ~u64{0}) throw std::overflow_error("expand: product exceeds 64 bits");
  }
  return static_cast<u64>(v);
}

u64 integer_root(u64 n, unsigned k) {
  if (k == 0) throw std::invalid_argument("integer_root: k must be positive");
  if (k == 1 || n < 2) return n;
  if (k >= 64) return 1;

  // x^k saturated at 2^64.
  auto power = [k](u64 x) -> u128 {
    u128 v = 1;
    for (unsigned i = 0; i < k; ++i) {
      v *= x;
      if (v > ~u64{0}) return u128{1} << 64;
    }
    return v;
  };

  const unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(n));
  u64 x = u64{1} << ((bits + k - 1) / k);  // x >= root
  for (;;) {
    u128 xk1 = 1;
    for (unsigned i = 0; i + 1 < k; ++i) xk1 *= x;
    const u128 next = ((k - 1) * static_cast<u128>(x) + n / xk1) / k;
    if (next >= x) break;
    x = static_cast<u64>(next);
  }
  while (power(x) > n) --x;
  while (power(x + 1) <= n) ++x;
  return x;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (const auto& [p, a] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

u64 carmichael_lambda(u64 n) {
  require_input_range(n, "carmichael_lambda");
  if (n == 0) throw std::invalid_argument("carmichael_lambda: n must be positive");
  u64 lambda = 1;
  for (const auto& [p, a] : factorize(n)) {
    u64 part;
    if (p == 2 && a >= 3)
      part = u64{1} << (a - 2);
    else
      part = PrimePower{p, a - 1}.value() * (p - 1);
    lambda = std::lcm(lambda, part);
  }
  return lambda;
}

u64 multiplicative_order(u64 a, u64 n) {
  require_input_range(n, "multiplicative_order");
  if (n == 0) throw std::invalid_argument("multiplicative_order: n must be positive");
  if (std::gcd(a, n) != 1)
    throw std::invalid_argument("multiplicative_order: gcd(" + std::to_string(a) + ", " +
                                std::to_string(n) + ") > 1");
  if (n == 1) return 1;
  // The order divides phi(n); strip prime factors while the power stays 1.
  u64 e = euler_phi(n);
  for (const auto& [r, k] : factorize(e)) {
    for (unsigned i = 0; i < k && pow_mod(a, e / r, n) == 1; ++i) e /= r;
  }
  return e;
}

}  // namespace lamsol
