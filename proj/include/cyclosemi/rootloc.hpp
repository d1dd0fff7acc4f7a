#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclosemi/polynomial.hpp"

namespace cyclosemi {

/// Q_{n,t}(theta) = P_{S_{n,t}}(e^{i theta}) / e^{i n theta}, a real
/// trigonometric polynomial whose zeros in [0, 2pi) are the unit-circle roots
/// of the family polynomial.
class QKernel {
 public:
  /// Throws std::invalid_argument unless t >= 0 and n >= 6t + 2.
  QKernel(std::int64_t n, std::int64_t t);

  std::int64_t n() const { return n_; }
  std::int64_t t() const { return t_; }

 private:
  std::int64_t n_;
  std::int64_t t_;
};

/// Division-free form:
/// 2cos(n th) - 2cos((n-1) th) + (-1)^t + 2 sum_{i<t} (-1)^i cos((2t-2i) th).
double q_eval(const QKernel& k, double theta);
/// -Q'(theta) / 2
double q_prime_eval(const QKernel& k, double theta);
/// -Q''(theta) / 2
double q_second_eval(const QKernel& k, double theta);

/// Uniform samples (theta, Q(theta)) over [0, 2pi).
std::vector<std::pair<double, double>> q_samples(const QKernel& k, std::size_t count);

/// No zero of Q within 1/(2t+4) of theta = 0 (on either side), by dense
/// sampling: max(1000, 20n) points per side, no sign change, and no sample
/// within 1e-9 of zero.
bool exclusion_check(const QKernel& k);

struct IndexFlags {
  std::int64_t index = 0;
  bool a_holds = false;  // -Q'/2 has the sign of (-1)^i on I_i
  bool b_holds = false;  // -Q''/2 keeps one sign, away from zero, on J_i
  bool c_holds = false;  // -Q'/2 has the sign of -(-1)^i on K_i
};

struct CertificateReport {
  std::int64_t i_min = 0;
  std::int64_t i_max = 0;
  double lower_bound = 0.0;  // (2n-1) / (4 pi (t+2)) - 1
  double upper_bound = 0.0;  // (2n-1) (1 - 1 / (4 pi (t+2)))
  std::vector<IndexFlags> flags;
  bool exclusion_ok = false;
  std::int64_t root_count = 0;
  std::int64_t r_bound = 0;  // (t+1)^2
  std::int64_t t_bound = 0;  // 4n

  bool all_flags_hold() const;
  bool passed() const { return exclusion_ok && all_flags_hold(); }
};

/// Samples the sign conditions on the intervals
///   I_i = [(4i-1)pi/(4n-2), (4i+1)pi/(4n-2)], J_i = next quarter, K_i = I_{i+1}
/// for every positive integer i in [lower_bound, upper_bound], 64 points each.
/// Throws std::invalid_argument when n < certificate_threshold(t).
CertificateReport certificate_check(const QKernel& k);

struct UnitCircleRoots {
  // Roots counted with multiplicity (suspected double roots count twice).
  std::int64_t count = 0;
  std::int64_t sign_change_roots = 0;
  std::int64_t suspected_double_roots = 0;
  std::vector<double> thetas;
};

/// Zeros of Q on [0, 2pi): sign changes on a 64n-point grid refined by
/// bisection to width 1e-12, plus tangential zeros found at local minima of
/// |Q| that refine below 1e-9. Numerical and advisory; cyclotomic_test is the
/// exact authority.
UnitCircleRoots count_unit_circle_roots(const QKernel& k);

class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All deg(p) complex roots by Aberth-Ehrlich iteration from a perturbed
/// circle. Converged when the largest update is below tol and every residual
/// |p(z)| / (1 + |z|)^deg is below 1e-10. Throws std::invalid_argument for a
/// constant polynomial and NonConvergenceError after the iteration budget.
std::vector<std::complex<double>> complex_roots(const IntPoly& p, double tol = 1e-12);

/// Sum of |coefficient differences| between p and lead(p) * prod (x - z).
double reconstruction_error(const IntPoly& p, const std::vector<std::complex<double>>& roots);

struct BandReport {
  std::int64_t n = 0;
  double band = 0.0;  // (ln n)^2 / n
  double epsilon = 1e-8;
  double max_deviation = 0.0;      // max | |z| - 1 |
  double max_band_violation = 0.0; // max(0, max_deviation - band)
  std::vector<std::complex<double>> roots;

  bool pass() const { return max_band_violation <= epsilon; }
  // At least one root off the unit circle by more than 1e-6.
  bool off_circle_witness() const { return max_deviation > 1e-6; }
};

/// Root moduli of x^{2n} - x^{2n-1} + x^n - x + 1 against 1 +- (ln n)^2 / n.
/// Throws std::invalid_argument for n < 12.
BandReport theorem7_band_check(std::int64_t n);

}  // namespace cyclosemi
