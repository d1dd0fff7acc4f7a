#include "cyclosemi/rootloc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cyclosemi/family.hpp"

namespace cyclosemi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroWindow = 1e-9;
constexpr double kBisectWidth = 1e-12;
constexpr std::size_t kCertificateSamples = 64;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

template <typename F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (sign_of(fmid) == sign_of(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Samples f at `count` evenly spaced points of [lo, hi], endpoints included,
// and reports whether every value has the wanted sign with magnitude > floor.
template <typename F>
bool holds_sign(F&& f, double lo, double hi, int wanted, double floor) {
  for (std::size_t j = 0; j < kCertificateSamples; ++j) {
    const double theta = lo + (hi - lo) * static_cast<double>(j) / (kCertificateSamples - 1);
    const double v = f(theta);
    if (sign_of(v) != wanted || std::abs(v) <= floor) return false;
  }
  return true;
}

}  // namespace

QKernel::QKernel(std::int64_t n, std::int64_t t) : n_(n), t_(t) {
  if (t < 0 || n < 6 * t + 2) {
    throw std::invalid_argument("QKernel requires t >= 0 and n >= 6t + 2, got n = " + std::to_string(n) +
                                ", t = " + std::to_string(t));
  }
}

double q_eval(const QKernel& k, double theta) {
  const auto n = static_cast<double>(k.n());
  const std::int64_t t = k.t();
  double q = 2.0 * std::cos(n * theta) - 2.0 * std::cos((n - 1.0) * theta) + (t % 2 == 0 ? 1.0 : -1.0);
  for (std::int64_t i = 0; i < t; ++i) {
    q += (i % 2 == 0 ? 2.0 : -2.0) * std::cos(static_cast<double>(2 * t - 2 * i) * theta);
  }
  return q;
}

double q_prime_eval(const QKernel& k, double theta) {
  const auto n = static_cast<double>(k.n());
  const std::int64_t t = k.t();
  double v = n * std::sin(n * theta) - (n - 1.0) * std::sin((n - 1.0) * theta);
  for (std::int64_t i = 1; i <= t; ++i) {
    const double sgn = (i + t) % 2 == 0 ? 1.0 : -1.0;
    v += 2.0 * sgn * static_cast<double>(i) * std::sin(static_cast<double>(2 * i) * theta);
  }
  return v;
}

double q_second_eval(const QKernel& k, double theta) {
  const auto n = static_cast<double>(k.n());
  const std::int64_t t = k.t();
  double v = n * n * std::cos(n * theta) - (n - 1.0) * (n - 1.0) * std::cos((n - 1.0) * theta);
  for (std::int64_t i = 1; i <= t; ++i) {
    const double sgn = (i + t) % 2 == 0 ? 1.0 : -1.0;
    const auto di = static_cast<double>(i);
    v += 4.0 * sgn * di * di * std::cos(2.0 * di * theta);
  }
  return v;
}

std::vector<std::pair<double, double>> q_samples(const QKernel& k, std::size_t count) {
  std::vector<std::pair<double, double>> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(count);
    out.emplace_back(theta, q_eval(k, theta));
  }
  return out;
}

bool exclusion_check(const QKernel& k) {
  const double width = 1.0 / static_cast<double>(2 * k.t() + 4);
  const std::size_t count = std::max<std::size_t>(1000, 20 * static_cast<std::size_t>(k.n()));
  const auto side_ok = [&](double start, bool include_end) {
    const std::size_t denom = include_end ? count - 1 : count;
    int first_sign = 0;
    for (std::size_t j = 0; j < count; ++j) {
      const double theta = start + width * static_cast<double>(j) / static_cast<double>(denom);
      const double v = q_eval(k, theta);
      if (std::abs(v) <= kZeroWindow) return false;
      if (first_sign == 0) first_sign = sign_of(v);
      if (sign_of(v) != first_sign) return false;
    }
    return true;
  };
  return side_ok(0.0, true) && side_ok(kTwoPi - width, false);
}

bool CertificateReport::all_flags_hold() const {
  return std::all_of(flags.begin(), flags.end(),
                     [](const IndexFlags& f) { return f.a_holds && f.b_holds && f.c_holds; });
}

CertificateReport certificate_check(const QKernel& k) {
  const std::int64_t n = k.n();
  const std::int64_t t = k.t();
  if (n < certificate_threshold(t)) {
    throw std::invalid_argument("certificate_check requires n >= " + std::to_string(certificate_threshold(t)) +
                                " for t = " + std::to_string(t) + ", got n = " + std::to_string(n));
  }
  CertificateReport report;
  const double span = static_cast<double>(2 * n - 1);
  const double frac = 1.0 / (4.0 * kPi * static_cast<double>(t + 2));
  report.lower_bound = span * frac - 1.0;
  report.upper_bound = span * (1.0 - frac);
  report.i_min = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(report.lower_bound)));
  report.i_max = static_cast<std::int64_t>(std::floor(report.upper_bound));
  report.r_bound = (t + 1) * (t + 1);
  report.t_bound = 4 * n;

  const double h = kPi / static_cast<double>(4 * n - 2);
  const auto first = [&](double th) { return q_prime_eval(k, th); };
  const auto second = [&](double th) { return q_second_eval(k, th); };
  for (std::int64_t i = report.i_min; i <= report.i_max; ++i) {
    const int parity = i % 2 == 0 ? 1 : -1;
    const auto at = [&](std::int64_t quarter) { return static_cast<double>(4 * i + quarter) * h; };
    IndexFlags f;
    f.index = i;
    f.a_holds = holds_sign(first, at(-1), at(1), parity, 0.0);
    const int second_sign = sign_of(q_second_eval(k, 0.5 * (at(1) + at(3))));
    f.b_holds = second_sign != 0 && holds_sign(second, at(1), at(3), second_sign, kZeroWindow);
    f.c_holds = holds_sign(first, at(3), at(5), -parity, 0.0);
    report.flags.push_back(f);
  }
  report.exclusion_ok = exclusion_check(k);
  report.root_count = count_unit_circle_roots(k).count;
  return report;
}

UnitCircleRoots count_unit_circle_roots(const QKernel& k) {
  const auto grid = static_cast<std::size_t>(64 * k.n());
  const double step = kTwoPi / static_cast<double>(grid);
  std::vector<double> v(grid);
  for (std::size_t j = 0; j < grid; ++j) v[j] = q_eval(k, step * static_cast<double>(j));
  const auto at = [&](std::size_t j) { return v[j % grid]; };
  const auto q = [&](double th) { return q_eval(k, th); };
  const auto qp = [&](double th) { return q_prime_eval(k, th); };

  UnitCircleRoots out;
  const auto add_simple = [&](double theta) {
    out.thetas.push_back(std::fmod(theta + kTwoPi, kTwoPi));
    ++out.sign_change_roots;
    ++out.count;
  };

  for (std::size_t j = 0; j < grid; ++j) {
    const double lo = step * static_cast<double>(j);
    const double a = at(j);
    const double b = at(j + 1);
    const double prev = at(j + grid - 1);
    if (a == 0.0) {
      // Zero exactly on the grid: simple if the neighbours straddle it.
      if (sign_of(prev) * sign_of(b) < 0) {
        add_simple(lo);
      } else {
        out.thetas.push_back(lo);
        ++out.suspected_double_roots;
        out.count += 2;
      }
      continue;
    }
    if (sign_of(a) * sign_of(b) < 0) {
      add_simple(bisect(q, lo, lo + step));
      continue;
    }
    // Local minimum of |Q| with no sign change on either side: Q has an
    // extremum in (lo - step, lo + step) that may touch or cross zero.
    if (b == 0.0 || sign_of(prev) * sign_of(a) <= 0) continue;
    if (std::abs(a) > std::abs(prev) || std::abs(a) > std::abs(b)) continue;
    const double left = lo - step;
    const double right = lo + step;
    if (sign_of(qp(left)) * sign_of(qp(right)) >= 0) continue;
    const double extremum = bisect(qp, left, right);
    const double qe = q(extremum);
    if (std::abs(qe) < kZeroWindow) {
      out.thetas.push_back(std::fmod(extremum + kTwoPi, kTwoPi));
      ++out.suspected_double_roots;
      out.count += 2;
    } else if (sign_of(qe) != sign_of(a)) {
      add_simple(bisect(q, left, extremum));
      add_simple(bisect(q, extremum, right));
    }
  }
  std::sort(out.thetas.begin(), out.thetas.end());
  return out;
}

std::vector<std::complex<double>> complex_roots(const IntPoly& p, double tol) {
  if (p.degree() < 1) throw std::invalid_argument("complex_roots: polynomial must be nonconstant");
  using cd = std::complex<double>;

  std::size_t zero_roots = 0;
  while (p[zero_roots] == 0) ++zero_roots;
  const auto& raw = p.coeffs();
  std::vector<double> a(raw.size() - zero_roots);
  const double lead = raw.back().convert_to<double>();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = raw[i + zero_roots].convert_to<double>() / lead;
  const std::size_t deg = a.size() - 1;

  std::vector<cd> roots(zero_roots, cd(0.0, 0.0));
  if (deg == 0) return roots;

  const auto eval = [&](cd z, cd& value, cd& deriv) {
    value = a[deg];
    deriv = 0.0;
    for (std::size_t i = deg; i-- > 0;) {
      deriv = deriv * z + value;
      value = value * z + a[i];
    }
  };

  const double radius = std::pow(std::abs(a[0]), 1.0 / static_cast<double>(deg));
  std::vector<cd> z(deg);
  for (std::size_t j = 0; j < deg; ++j) {
    const double angle = kTwoPi * (static_cast<double>(j) + 0.25) / static_cast<double>(deg) + 0.1;
    const double r = radius * (1.0 + 0.01 * std::sin(3.0 * static_cast<double>(j) + 1.0));
    z[j] = std::polar(r, angle);
  }

  constexpr int kMaxIterations = 2000;
  std::vector<char> frozen(deg, 0);
  bool converged = false;
  for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
    double max_update = 0.0;
    for (std::size_t k = 0; k < deg; ++k) {
      if (frozen[k]) continue;
      cd value, deriv;
      eval(z[k], value, deriv);
      if (value == 0.0) {
        frozen[k] = 1;
        continue;
      }
      const cd ratio = value / deriv;
      cd repulsion = 0.0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const cd update = ratio / (1.0 - ratio * repulsion);
      z[k] -= update;
      const double size = std::abs(update);
      max_update = std::max(max_update, size);
      if (size < tol * std::max(1.0, std::abs(z[k]))) frozen[k] = 1;
    }
    converged = max_update < tol || std::all_of(frozen.begin(), frozen.end(), [](char f) { return f != 0; });
  }

  for (const cd& root : z) {
    cd value, deriv;
    eval(root, value, deriv);
    const double scaled = std::abs(value) / std::pow(1.0 + std::abs(root), static_cast<double>(deg));
    if (!converged || !std::isfinite(scaled) || scaled >= 1e-10) {
      throw NonConvergenceError("complex_roots: no convergence for degree " + std::to_string(p.degree()));
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

double reconstruction_error(const IntPoly& p, const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  const double lead = p.is_zero() ? 0.0 : p.leading().convert_to<double>();
  const std::size_t len = std::max(c.size(), p.coeffs().size());
  double err = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const std::complex<double> rebuilt = i < c.size() ? lead * c[i] : 0.0;
    err += std::abs(rebuilt - p[i].convert_to<double>());
  }
  return err;
}

BandReport theorem7_band_check(std::int64_t n) {
  if (n < 12) throw std::invalid_argument("theorem7_band_check requires n >= 12, got " + std::to_string(n));
  const IntPoly p = family_polynomial_closed_form(FamilyParams::make(n, 0));
  BandReport report;
  report.n = n;
  const double log_n = std::log(static_cast<double>(n));
  report.band = log_n * log_n / static_cast<double>(n);
  report.roots = complex_roots(p);
  for (const auto& z : report.roots) {
    report.max_deviation = std::max(report.max_deviation, std::abs(std::abs(z) - 1.0));
  }
  report.max_band_violation = std::max(0.0, report.max_deviation - report.band);
  return report;
}

}  // namespace cyclosemi
