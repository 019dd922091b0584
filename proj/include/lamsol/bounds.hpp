#pragma once

// Numerical and counting machinery around prime chains and the size of f(q):
// Hurwitz zeta, the progression matrix M and the chain constant C(eps), the
// census constant c(eps), chain enumeration, f-censuses and an empirical
// check of the ERH prime-counting inequality.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lamsol/arith.hpp"
#include "lamsol/pratt.hpp"

namespace lamsol {

/// Raised when sum_k M^k diverges or an iteration fails to settle.
class NotConvergent : public std::runtime_error {
 public:
  NotConvergent(const std::string& what, double spectral_radius)
      : std::runtime_error(what), spectral_radius_(spectral_radius) {}
  double spectral_radius() const { return spectral_radius_; }

 private:
  double spectral_radius_;
};

inline constexpr double kMinZetaExponent = 1.01;

/// zeta(s, alpha) = sum_{n >= 0} (n + alpha)^-s, absolute error below 1e-12
/// for s >= 1.01 and 0 < alpha <= 1.
double hurwitz_zeta(double s, double alpha);

/// Sum of m^-s over m >= 1 with a m + 1 = b (mod w).
double progression_entry(u64 w, double s, u64 b, u64 a);

struct ProgressionMatrix {
  u64 w = 0;
  double s = 0;
  std::vector<u64> units;       // residues coprime to w, ascending
  std::vector<double> entries;  // row b, column a, row-major

  std::size_t dim() const { return units.size(); }
  double at(std::size_t row, std::size_t col) const { return entries[row * dim() + col]; }
};

struct MatrixOptions {
  std::size_t max_dimension = 1024;
};

/// w must be a primorial 2, 6, 30, 210, ...
ProgressionMatrix build_progression_matrix(u64 w, double s, MatrixOptions options = {});

/// Dominant eigenvalue of a nonnegative square matrix by power iteration,
/// relative tolerance 1e-10. Throws NotConvergent past the iteration cap.
double spectral_radius(std::span<const double> entries, std::size_t dim);
double spectral_radius(const ProgressionMatrix& m);

struct InverseColumnSums {
  std::vector<double> sums;  // column sums of (I - M)^-1
  double largest = 0;
  double residual = 0;       // max |(I - M) X - I|
};

/// Solves (I - M) X = I by LU with partial pivoting. Throws std::runtime_error
/// when the matrix is singular or the residual exceeds 1e-9.
InverseColumnSums inverse_column_sums(std::span<const double> entries, std::size_t dim);

struct CEpsResult {
  u64 w = 0;
  double s = 0;
  std::size_t dimension = 0;
  double spectral_radius = 0;
  double C = 0;  // largest column sum of (I - M)^-1
  double residual = 0;
};

/// Throws NotConvergent when the spectral radius of M is at least 1.
CEpsResult compute_C_eps(u64 w, double s, MatrixOptions options = {});

/// c(eps) = C (2^(-1-eps) - 6^(-1-eps)) zeta(1+eps) (0.44 + 2.43 / (1 + 2 eps)).
double compute_c_eps(double eps, double C);

/// Dimension line, then one row per line with 15 significant digits.
void write_matrix(std::ostream& out, const ProgressionMatrix& m);

struct ChainReport {
  u64 p = 0;
  u64 x = 0;
  u64 count = 0;
  u64 max_length = 0;
  double eps = 0.25;
  double C = 7.37;
  double bound = 0;  // C (x/p)^(1+eps)
  bool satisfied = true;
};

/// Counts prime chains p = p_1 | p_2 - 1, p_2 | p_3 - 1, ... with p_k <= x.
ChainReport enumerate_chains(u64 p, u64 x, const PrimeSieve& sieve, double eps = 0.25, double C = 7.37);

struct CensusOptions {
  // Only count q with p^a || q - 1.
  std::optional<PrimePower> unitary_filter;
  unsigned workers = 1;
};

struct CensusReport {
  u64 x = 0;
  u64 y = 0;
  u64 count = 0;
  double eps = 0.25;
  double C = 7.37;
  double c_eps = 0;
  double bound = 0;            // c(eps) x^(1+eps) / (y^(1/2+eps) log y)
  bool in_hypothesis = false;  // the bound is only claimed for y >= 1e10
  std::optional<PrimePower> filter;
  std::optional<double> filtered_bound;     // p^a || q-1 version of the bound
  bool filtered_in_hypothesis = false;      // p^(a+1) >= 1e10
};

/// #{q <= x prime : f(q) >= y}, with the analytic bound alongside.
CensusReport census_f_ge(u64 x, u64 y, double eps, double C, const PrimeSieve& sieve, FCache& cache,
                         const CensusOptions& options = {});

/// #{q <= x prime : f(q) = v}.
u64 census_f_equal(u64 x, u64 v, const PrimeSieve& sieve, FCache& cache, unsigned workers = 1);

/// li(x) = integral from 2 to x of dt / log t.
double log_integral(double x);

struct ErhReport {
  u64 x = 0;
  u64 m = 0;
  u64 b = 0;
  u64 pi_xmb = 0;
  double main_term = 0;    // li(x) / phi(m)
  double error_bound = 0;  // sqrt(x) log(x m^2)
  bool holds = false;
};

/// Requires m >= 2 and gcd(b, m) = 1.
ErhReport check_erh_bound(u64 x, u64 m, u64 b, const PrimeSieve& sieve);

}  // namespace lamsol
