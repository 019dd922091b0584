#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace oracle {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> primes_upto(u64 x) {
  std::vector<u64> out;
  for (u64 n = 2; n <= x; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 order(u64 a, u64 n) {
  if (n == 1) return 1;
  u64 x = a % n;
  u64 k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

namespace {

u64 power_mod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  for (; e; e >>= 1) {
    if (e & 1) r = r * a % n;
    a = a * a % n;
  }
  return r;
}

}  // namespace

u64 lambda(u64 n) {
  // the exponent of the unit group: the least d | phi with a^d = 1 for every unit a
  std::vector<u64> units;
  for (u64 a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) units.push_back(a);
  if (units.size() <= 1) return 1;
  const u64 phi = units.size();
  for (u64 d = 1; d <= phi; ++d) {
    if (phi % d) continue;
    bool all = true;
    for (u64 a : units)
      if (power_mod(a, d, n) != 1) {
        all = false;
        break;
      }
    if (all) return d;
  }
  return phi;
}

u64 f(u64 q) {
  static std::map<u64, u64> memo;
  if (q == 2) return 1;
  if (auto it = memo.find(q); it != memo.end()) return it->second;
  u64 best = 1;
  for (auto [p, e] : factor(q - 1)) {
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    if (e >= 2) best = std::max(best, pe);
    best = std::max(best, f(p));
  }
  memo[q] = best;
  return best;
}

u64 chain_count(u64 p, u64 x) {
  if (p > x) return 0;
  u64 total = 1;
  for (u64 r = p + 1; r <= x; ++r)
    if ((r - 1) % p == 0 && is_prime(r)) total += chain_count(r, x);
  return total;
}

double progression_sum(u64 w, double s, u64 c) {
  // direct terms, then the integral of the tail with a trapezoid correction
  constexpr u64 kTerms = 2'000'000;
  long double sum = 0;
  for (u64 j = kTerms; j-- > 0;) sum += std::pow(static_cast<long double>(c + w * j), -s);
  const long double m = c + static_cast<long double>(w) * kTerms;
  const long double tail = std::pow(m, 1 - s) / (w * (s - 1)) + std::pow(m, -s) / 2 +
                           s * w * std::pow(m, -s - 1) / 12;
  return static_cast<double>(sum + tail);
}

double zeta(double s) { return progression_sum(1, s, 1); }

double li_from_2(double x) {
  // Ramanujan's series for li(x), minus li(2)
  constexpr double kGamma = 0.57721566490153286061;
  constexpr double kLi2 = 1.04516378011749278484;
  const double L = std::log(x);
  double sum = 0;
  double term = 0;
  double inner = 0;
  for (int n = 1; n < 300; ++n) {
    term = n == 1 ? L : term * -L / (2.0 * n);
    if (n % 2 == 1) inner += 1.0 / n;
    sum += term * inner;
  }
  return kGamma + std::log(L) + std::sqrt(x) * sum - kLi2;
}

std::optional<WitnessHit> witness(u64 p, unsigned a, u64 limit) {
  u64 pa = 1;
  for (unsigned i = 0; i < a; ++i) pa *= p;
  const long double shortcut = std::pow(static_cast<long double>(p), 2 * a + 1);
  for (u64 k = 1; k * pa + 1 <= limit; ++k) {
    if (k % p == 0) continue;
    const u64 q = k * pa + 1;
    if (!is_prime(q)) continue;
    if (q < shortcut) return WitnessHit{q, true};
    if (f(q) < pa * p) return WitnessHit{q, false};
  }
  return std::nullopt;
}

std::vector<std::vector<u64>> closure_rounds(u64 bound) {
  std::set<u64> forced{2};
  std::map<u64, unsigned> divisor{{2, 2}};
  const auto primes = primes_upto(bound);
  std::vector<std::vector<u64>> rounds;
  for (;;) {
    std::vector<u64> added;
    for (u64 p : primes) {
      if (forced.count(p)) continue;
      bool ok = true;
      for (auto [r, e] : factor(p - 1)) {
        auto it = divisor.find(r);
        if (it == divisor.end() || it->second < e) ok = false;
      }
      if (ok) added.push_back(p);
    }
    if (added.empty()) return rounds;
    for (u64 p : added) {
      forced.insert(p);
      divisor[p] = std::max(divisor[p], 1u);
      for (auto [r, e] : factor(p - 1)) divisor[r] = std::max(divisor[r], e);
    }
    rounds.push_back(added);
  }
}

}  // namespace oracle
