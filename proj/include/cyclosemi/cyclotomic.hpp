#pragma once

#include <cstdint>
#include <vector>

#include "cyclosemi/polynomial.hpp"

namespace cyclosemi {

/// The d-th cyclotomic polynomial. Memoized process-wide; safe to call from
/// several threads. Throws std::invalid_argument for d == 0.
IntPoly cyclotomic(std::uint64_t d);

std::uint64_t euler_phi(std::uint64_t d);

/// phi[0..limit], phi[0] = 0.
std::vector<std::uint32_t> totient_table(std::uint64_t limit);

struct CyclotomicFactor {
  std::uint64_t index = 0;
  unsigned multiplicity = 0;

  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicReport {
  // Ascending by index.
  std::vector<CyclotomicFactor> factors;
  IntPoly remainder;
  bool is_cyclotomic = false;

  // Sum of phi(d) * m_d over the factors.
  std::uint64_t cyclotomic_degree() const;
  // (prod Phi_d^m_d) * remainder
  IntPoly reconstruct() const;
};

/// Peels every cyclotomic factor off p.
///
/// Candidates d are visited in ascending order while d <= 2 * deg(remainder)^2
/// (phi(d) >= sqrt(d/2) makes that bound exhaustive), skipping any d with
/// phi(d) > deg(remainder). A candidate is first screened by evaluating the
/// remainder at a primitive d-th root of unity modulo a prime q = 1 (mod d);
/// only survivors are divided exactly. The verdict is cyclotomic iff the
/// final remainder is the constant 1.
///
/// Throws std::invalid_argument for the zero polynomial.
CyclotomicReport cyclotomic_test(const IntPoly& p);

}  // namespace cyclosemi
