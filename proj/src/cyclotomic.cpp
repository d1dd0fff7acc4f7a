#include "cyclosemi/cyclotomic.hpp"

#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace cyclosemi {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<u64> distinct_prime_factors(u64 d) {
  std::vector<u64> primes;
  for (u64 p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    primes.push_back(p);
    while (d % p == 0) d /= p;
  }
  if (d > 1) primes.push_back(d);
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic for every 64-bit input with these witnesses.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// A prime q = 1 (mod d) and an element of exact multiplicative order d.
// Every root of Phi_d in GF(q) is such an element, so Phi_d | f over Z
// forces f(omega) = 0 (mod q).
struct ModularRoot {
  u64 q = 0;
  u64 omega = 0;
};

ModularRoot find_modular_root(u64 d) {
  const auto primes = distinct_prime_factors(d);
  for (u64 k = (u64{1} << 61) / d; ; ++k) {
    const u64 q = k * d + 1;
    if (!is_prime_u64(q)) continue;
    for (u64 a = 2; a < q; ++a) {
      const u64 omega = powmod(a, (q - 1) / d, q);
      bool primitive = d == 1 ? omega == 1 : true;
      for (u64 r : primes) {
        if (powmod(omega, d / r, q) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) return {q, omega};
    }
  }
}

class CyclotomicCache {
 public:
  std::shared_ptr<const IntPoly> squarefree(u64 r) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = polys_.find(r); it != polys_.end()) return it->second;
    }
    std::shared_ptr<const IntPoly> poly;
    if (r == 1) {
      poly = std::make_shared<const IntPoly>(IntPoly{-1, 1});
    } else {
      // Phi_{p m}(x) = Phi_m(x^p) / Phi_m(x) for a prime p not dividing m.
      const u64 p = distinct_prime_factors(r).back();
      auto inner = squarefree(r / p);
      auto quotient = poly_divexact(inner->substitute_power(p), *inner);
      if (!quotient) throw std::logic_error("cyclotomic recurrence produced a non-exact division");
      poly = std::make_shared<const IntPoly>(std::move(*quotient));
    }
    std::unique_lock lock(mutex_);
    return polys_.emplace(r, std::move(poly)).first->second;
  }

  ModularRoot modular_root(u64 d) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = roots_.find(d); it != roots_.end()) return it->second;
    }
    ModularRoot root = find_modular_root(d);
    std::unique_lock lock(mutex_);
    return roots_.emplace(d, root).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<u64, std::shared_ptr<const IntPoly>> polys_;
  std::unordered_map<u64, ModularRoot> roots_;
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

// Coefficients reduced lazily modulo whichever prime a candidate needs.
class ResidueView {
 public:
  explicit ResidueView(const IntPoly& p) : poly_(&p) {
    small_.reserve(p.coeffs().size());
    for (const BigInt& c : p.coeffs()) {
      if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min()) {
        small_.clear();
        fits_ = false;
        return;
      }
      small_.push_back(c.convert_to<std::int64_t>());
    }
  }

  u64 evaluate(const ModularRoot& root) const {
    const auto& coeffs = poly_->coeffs();
    u64 acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      acc = mulmod(acc, root.omega, root.q);
      acc = (acc + residue(i, coeffs, root.q)) % root.q;
    }
    return acc;
  }

 private:
  u64 residue(std::size_t i, const std::vector<BigInt>& coeffs, u64 q) const {
    if (fits_) {
      const std::int64_t v = small_[i];
      const auto sq = static_cast<std::int64_t>(q);
      std::int64_t r = v % sq;
      return static_cast<u64>(r < 0 ? r + sq : r);
    }
    BigInt r = coeffs[i] % q;
    if (r < 0) r += q;
    return r.convert_to<u64>();
  }

  const IntPoly* poly_;
  std::vector<std::int64_t> small_;
  bool fits_ = true;
};

}  // namespace

IntPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: index must be positive");
  const auto primes = distinct_prime_factors(d);
  const u64 radical = std::accumulate(primes.begin(), primes.end(), u64{1}, std::multiplies<>());
  const auto base = cache().squarefree(radical);
  // Phi_d(x) = Phi_rad(d)(x^(d / rad(d))).
  return radical == d ? *base : base->substitute_power(d / radical);
}

std::uint64_t euler_phi(std::uint64_t d) {
  if (d == 0) return 0;
  u64 result = d;
  for (u64 p : distinct_prime_factors(d)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint32_t> totient_table(std::uint64_t limit) {
  std::vector<std::uint32_t> phi(limit + 1);
  std::iota(phi.begin(), phi.end(), 0U);
  for (u64 p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (u64 k = p; k <= limit; k += p) phi[k] -= phi[k] / static_cast<std::uint32_t>(p);
  }
  return phi;
}

std::uint64_t CyclotomicReport::cyclotomic_degree() const {
  u64 total = 0;
  for (const auto& f : factors) total += euler_phi(f.index) * f.multiplicity;
  return total;
}

IntPoly CyclotomicReport::reconstruct() const {
  IntPoly product = remainder;
  for (const auto& f : factors) {
    const IntPoly phi = cyclotomic(f.index);
    for (unsigned k = 0; k < f.multiplicity; ++k) product *= phi;
  }
  return product;
}

CyclotomicReport cyclotomic_test(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cyclotomic_test: zero polynomial");

  CyclotomicReport report;
  IntPoly rem = p;
  const auto bound = [](const IntPoly& r) {
    const auto deg = static_cast<u64>(r.degree());
    return 2 * deg * deg;
  };
  const auto phi = totient_table(bound(p));
  ResidueView residues(rem);

  for (u64 d = 1; rem.degree() > 0 && d <= bound(rem); ++d) {
    if (phi[d] > static_cast<u64>(rem.degree())) continue;
    const ModularRoot root = cache().modular_root(d);
    unsigned multiplicity = 0;
    while (rem.degree() >= static_cast<int>(phi[d]) && residues.evaluate(root) == 0) {
      auto quotient = poly_divexact(rem, cyclotomic(d));
      if (!quotient) break;
      rem = std::move(*quotient);
      residues = ResidueView(rem);
      ++multiplicity;
    }
    if (multiplicity > 0) report.factors.push_back({d, multiplicity});
  }

  report.remainder = std::move(rem);
  report.is_cyclotomic = report.remainder.is_one();
  return report;
}

}  // namespace cyclosemi
