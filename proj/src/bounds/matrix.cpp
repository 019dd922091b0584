#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <tuple>

#include "lamsol/bounds.hpp"

namespace lamsol {

namespace {

constexpr int kPowerIterationCap = 100'000;
constexpr double kEigenTolerance = 1e-10;
constexpr double kResidualLimit = 1e-9;

// Inverse of a modulo w; gcd(a, w) must be 1.
u64 inverse_mod(u64 a, u64 w) {
  long long r0 = static_cast<long long>(w), r1 = static_cast<long long>(a % w);
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  if (r0 != 1) throw std::invalid_argument("inverse_mod: " + std::to_string(a) + " is not a unit");
  return static_cast<u64>((t0 % static_cast<long long>(w) + static_cast<long long>(w)) % static_cast<long long>(w));
}

// Residue c in [1, w] of the progression m = c (mod w) that solves a m + 1 = b.
u64 progression_start(u64 w, u64 b, u64 a) {
  const u64 c = mul_mod(inverse_mod(a, w), (b + w - 1) % w, w);
  return c == 0 ? w : c;
}

void require_primorial(u64 w) {
  if (w < 2) throw std::invalid_argument("progression matrix: w must be a primorial, got " + std::to_string(w));
  u64 expected = 2;
  for (const auto& [p, a] : factorize(w)) {
    if (a != 1 || p != expected)
      throw std::invalid_argument("progression matrix: w = " + std::to_string(w) +
                                  " is not the product of the primes up to some y");
    expected = p + 1;
    while (!is_prime(expected)) ++expected;
  }
}

}  // namespace

double progression_entry(u64 w, double s, u64 b, u64 a) {
  const u64 c = progression_start(w, b % w, a % w);
  return std::pow(static_cast<double>(w), -s) * hurwitz_zeta(s, static_cast<double>(c) / static_cast<double>(w));
}

ProgressionMatrix build_progression_matrix(u64 w, double s, MatrixOptions options) {
  require_input_range(w, "build_progression_matrix");
  require_primorial(w);
  if (!(s >= kMinZetaExponent)) throw std::invalid_argument("progression matrix: s must be at least 1.01");
  const u64 phi = euler_phi(w);
  if (phi > options.max_dimension)
    throw std::invalid_argument("progression matrix: dimension " + std::to_string(phi) + " exceeds the cap " +
                                std::to_string(options.max_dimension));

  ProgressionMatrix m;
  m.w = w;
  m.s = s;
  for (u64 u = 1; u < w; ++u)
    if (std::gcd(u, w) == 1) m.units.push_back(u);

  // Each entry depends only on its progression start c, so evaluate zeta once per c.
  const double scale = std::pow(static_cast<double>(w), -s);
  std::map<u64, double> by_start;
  const std::size_t n = m.units.size();
  m.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const u64 c = progression_start(w, m.units[i], m.units[j]);
      auto it = by_start.find(c);
      if (it == by_start.end())
        it = by_start.emplace(c, scale * hurwitz_zeta(s, static_cast<double>(c) / static_cast<double>(w))).first;
      m.entries[i * n + j] = it->second;
    }
  }
  return m;
}

double spectral_radius(std::span<const double> entries, std::size_t dim) {
  if (dim == 0 || entries.size() != dim * dim) throw std::invalid_argument("spectral_radius: not a square matrix");
  if (std::any_of(entries.begin(), entries.end(), [](double v) { return !(v >= 0) || !std::isfinite(v); }))
    throw std::invalid_argument("spectral_radius: entries must be finite and nonnegative");

  std::vector<double> x(dim, 1.0), y(dim);
  double estimate = 0;
  for (int iter = 0; iter < kPowerIterationCap; ++iter) {
    for (std::size_t i = 0; i < dim; ++i) {
      double acc = 0;
      for (std::size_t j = 0; j < dim; ++j) acc += entries[i * dim + j] * x[j];
      y[i] = acc;
    }
    // Collatz-Wielandt bounds: min and max of y_i / x_i bracket the radius.
    double lo = INFINITY, hi = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] <= 0) continue;
      lo = std::min(lo, y[i] / x[i]);
      hi = std::max(hi, y[i] / x[i]);
    }
    if (hi == 0) return 0;
    estimate = 0.5 * (lo + hi);
    if (hi - lo <= kEigenTolerance * hi) return estimate;
    const double norm = *std::max_element(y.begin(), y.end());
    for (std::size_t i = 0; i < dim; ++i) x[i] = y[i] / norm;
  }
  throw NotConvergent("spectral_radius: power iteration did not settle within " +
                          std::to_string(kPowerIterationCap) + " steps",
                      estimate);
}

double spectral_radius(const ProgressionMatrix& m) { return spectral_radius(m.entries, m.dim()); }

InverseColumnSums inverse_column_sums(std::span<const double> entries, std::size_t dim) {
  if (dim == 0 || entries.size() != dim * dim) throw std::invalid_argument("inverse_column_sums: not a square matrix");

  // A = I - M, factored in place as P A = L U.
  std::vector<double> a(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a[i * dim + j] = (i == j ? 1.0 : 0.0) - entries[i * dim + j];
  const std::vector<double> original = a;

  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < dim; ++i)
      if (std::abs(a[i * dim + k]) > std::abs(a[pivot * dim + k])) pivot = i;
    if (a[pivot * dim + k] == 0) throw std::runtime_error("inverse_column_sums: I - M is singular");
    if (pivot != k) {
      std::swap_ranges(a.begin() + k * dim, a.begin() + (k + 1) * dim, a.begin() + pivot * dim);
      std::swap(perm[k], perm[pivot]);
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      const double factor = a[i * dim + k] /= a[k * dim + k];
      for (std::size_t j = k + 1; j < dim; ++j) a[i * dim + j] -= factor * a[k * dim + j];
    }
  }

  std::vector<double> x(dim * dim);  // column j of the inverse in x[.. * dim + j]
  std::vector<double> col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) col[i] = perm[i] == j ? 1.0 : 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < i; ++k) col[i] -= a[i * dim + k] * col[k];
    for (std::size_t i = dim; i-- > 0;) {
      for (std::size_t k = i + 1; k < dim; ++k) col[i] -= a[i * dim + k] * col[k];
      col[i] /= a[i * dim + i];
    }
    for (std::size_t i = 0; i < dim; ++i) x[i * dim + j] = col[i];
  }

  InverseColumnSums out;
  out.sums.assign(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out.sums[j] += x[i * dim + j];
  out.largest = *std::max_element(out.sums.begin(), out.sums.end());

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      double acc = i == j ? -1.0 : 0.0;
      for (std::size_t k = 0; k < dim; ++k) acc += original[i * dim + k] * x[k * dim + j];
      out.residual = std::max(out.residual, std::abs(acc));
    }
  }
  if (!(out.residual <= kResidualLimit))
    throw std::runtime_error("inverse_column_sums: residual " + std::to_string(out.residual) + " exceeds 1e-9");
  return out;
}

CEpsResult compute_C_eps(u64 w, double s, MatrixOptions options) {
  const ProgressionMatrix m = build_progression_matrix(w, s, options);
  CEpsResult out;
  out.w = w;
  out.s = s;
  out.dimension = m.dim();
  out.spectral_radius = spectral_radius(m);
  if (out.spectral_radius >= 1)
    throw NotConvergent("compute_C_eps: spectral radius " + std::to_string(out.spectral_radius) +
                            " >= 1, so sum M^k diverges",
                        out.spectral_radius);
  const auto inv = inverse_column_sums(m.entries, m.dim());
  out.C = inv.largest;
  out.residual = inv.residual;
  return out;
}

double compute_c_eps(double eps, double C) {
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("compute_c_eps: eps must lie in (0, 1]");
  if (!(C >= 0)) throw std::invalid_argument("compute_c_eps: C must be nonnegative");
  const double chain_sum = std::pow(2.0, -1 - eps) - std::pow(6.0, -1 - eps);
  return C * chain_sum * hurwitz_zeta(1 + eps, 1.0) * (0.44 + 2.43 / (1 + 2 * eps));
}

void write_matrix(std::ostream& out, const ProgressionMatrix& m) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << m.dim() << ' ' << m.dim() << '\n' << std::setprecision(15);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace lamsol
