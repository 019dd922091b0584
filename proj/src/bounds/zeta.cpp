#include <cmath>
#include <stdexcept>
#include <string>

#include "lamsol/bounds.hpp"

namespace lamsol {

namespace {

constexpr long kMinDirectTerms = 10'000;
constexpr double kTolerance = 1e-13;

// B_{2j} / (2j)! for j = 1..4.
constexpr double kBernoulli[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};

// Magnitude of the first omitted Euler-Maclaurin term at cut point v = N + alpha.
double omitted_term(double s, double v) {
  double rising = 1;
  for (int i = 0; i < 7; ++i) rising *= s + i;
  return std::abs(kBernoulli[3]) * rising * std::pow(v, -s - 7);
}

}  // namespace

double hurwitz_zeta(double s, double alpha) {
  if (!(s >= kMinZetaExponent) || !std::isfinite(s))
    throw std::invalid_argument("hurwitz_zeta: s = " + std::to_string(s) + " is below 1.01");
  if (!(alpha > 0 && alpha <= 1))
    throw std::invalid_argument("hurwitz_zeta: alpha must lie in (0, 1]");

  long n = kMinDirectTerms;
  while (omitted_term(s, n + alpha) > kTolerance) n *= 2;

  // Smallest terms first, compensated.
  double sum = 0;
  double carry = 0;
  for (long k = n - 1; k >= 0; --k) {
    const double y = std::pow(k + alpha, -s) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  const double v = n + alpha;
  double tail = std::pow(v, 1 - s) / (s - 1) + 0.5 * std::pow(v, -s);
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  for (int j = 0; j < 3; ++j) {
    tail += kBernoulli[j] * rising * std::pow(v, -s - 2 * j - 1);
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
  }
  return sum + tail;
}

}  // namespace lamsol
