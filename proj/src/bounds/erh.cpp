#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lamsol/bounds.hpp"

namespace lamsol {

namespace {

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 4> kNodes = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                          0.9602898564975363};
constexpr std::array<double, 4> kWeights = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                            0.1012285362903763};

// Panel width in u = log t.
constexpr double kPanel = 0.125;

}  // namespace

double log_integral(double x) {
  if (!(x >= 2)) throw std::invalid_argument("log_integral: x must be at least 2");
  // With t = e^u the integrand becomes e^u / u, smooth on [log 2, log x].
  const double lo = std::log(2.0);
  const double hi = std::log(x);
  if (hi <= lo) return 0;
  const auto panels = static_cast<long>(std::ceil((hi - lo) / kPanel));
  const double h = (hi - lo) / static_cast<double>(panels);
  double total = 0;
  for (long k = 0; k < panels; ++k) {
    const double mid = lo + (static_cast<double>(k) + 0.5) * h;
    double panel = 0;
    for (std::size_t i = 0; i < kNodes.size(); ++i) {
      for (double sign : {-1.0, 1.0}) {
        const double u = mid + sign * kNodes[i] * h / 2;
        panel += kWeights[i] * std::exp(u) / u;
      }
    }
    total += panel * h / 2;
  }
  return total;
}

ErhReport check_erh_bound(u64 x, u64 m, u64 b, const PrimeSieve& sieve) {
  if (m < 2) throw std::invalid_argument("check_erh_bound: m must be at least 2");
  require_input_range(m, "check_erh_bound");
  if (std::gcd(b, m) != 1)
    throw std::invalid_argument("check_erh_bound: gcd(" + std::to_string(b) + ", " + std::to_string(m) + ") > 1");
  if (x < 2) throw std::invalid_argument("check_erh_bound: x must be at least 2");
  if (x > sieve.limit())
    throw std::out_of_range("check_erh_bound: x = " + std::to_string(x) + " exceeds sieve limit " +
                            std::to_string(sieve.limit()));

  ErhReport report;
  report.x = x;
  report.m = m;
  report.b = b;
  for (u64 r = b % m; r <= x; r += m) {
    if (sieve.is_prime(r)) ++report.pi_xmb;
    if (r > x - m) break;
  }
  const double xd = static_cast<double>(x);
  const double md = static_cast<double>(m);
  report.main_term = log_integral(xd) / static_cast<double>(euler_phi(m));
  report.error_bound = std::sqrt(xd) * std::log(xd * md * md);
  report.holds = std::abs(static_cast<double>(report.pi_xmb) - report.main_term) <= report.error_bound;
  return report;
}

}  // namespace lamsol
