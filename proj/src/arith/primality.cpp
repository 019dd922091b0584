#include "lamsol/arith.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace lamsol {

namespace {

// Primes below 2^10; enough for trial division of anything below 2^20.
constexpr auto kTinyPrimes = [] {
  std::array<bool, 1024> composite{};
  std::array<unsigned, 172> out{};
  std::size_t k = 0;
  for (unsigned i = 2; i < 1024; ++i) {
    if (composite[i]) continue;
    out[k++] = i;
    for (unsigned j = i * i; j < 1024; j += i) composite[j] = true;
  }
  return out;
}();

static_assert(kTinyPrimes.back() == 1021);

// Strong-probable-prime bases that are exact for every n < 3.3e24.
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(u64 n, u64 base, u64 d, unsigned r) {
  u64 x = pow_mod(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

void require_input_range(u64 n, const char* what) {
  if (n >= kInputLimit)
    throw std::out_of_range(std::string(what) + ": argument " + std::to_string(n) +
                            " is not below 2^63");
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  require_input_range(n, "is_prime");
  if (n < 2) return false;
  if (n < (u64{1} << 20)) {
    for (unsigned p : kTinyPrimes) {
      if (u64{p} * p > n) return true;
      if (n % p == 0) return n == p;
    }
    return true;
  }
  for (u64 p : kWitnesses)
    if (n % p == 0) return false;

  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 base : kWitnesses)
    if (!strong_probable_prime(n, base, d, r)) return false;
  return true;
}

}  // namespace lamsol
