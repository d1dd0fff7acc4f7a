#pragma once

#include <cstdint>
#include <vector>

#include "cyclosemi/polynomial.hpp"
#include "cyclosemi/semigroup.hpp"

namespace cyclosemi {

/// Validated (n, t) index of the symmetric family S_{n,t}.
///
/// Requires t >= 0 and n >= 6t + 2. The single point (n, t) = (2, 0) is also
/// rejected: its only generator is 2, which does not generate a numerical
/// semigroup.
class FamilyParams {
 public:
  /// Throws std::invalid_argument outside the domain.
  static FamilyParams make(std::int64_t n, std::int64_t t);
  static bool valid(std::int64_t n, std::int64_t t);

  std::int64_t n() const { return n_; }
  std::int64_t t() const { return t_; }

  // n - 3t - 1
  std::int64_t expected_embedding_dimension() const { return n_ - 3 * t_ - 1; }

 private:
  FamilyParams(std::int64_t n, std::int64_t t) : n_(n), t_(t) {}
  std::int64_t n_;
  std::int64_t t_;
};

/// Sorted union of the pairs n-2t+4i, n-2t+4i+1 (i < t), the run
/// n+2t .. 2n-4t-2, and the singletons 2n-4t+4j-1 (j < t).
std::vector<Element> family_generators(const FamilyParams& p);

NumericalSemigroup family_semigroup(const FamilyParams& p);

/// x^{2n} - x^{2n-1} + sum_{i=0}^{2t} (-1)^i x^{n+2t-2i} - x + 1
IntPoly family_polynomial_closed_form(const FamilyParams& p);

struct FamilyVerdict {
  std::int64_t embedding_dimension = 0;
  std::int64_t expected_embedding_dimension = 0;
  bool symmetric = false;
  bool cyclotomic = false;

  // Dimension matches n - 3t - 1, symmetric, and not cyclotomic.
  bool agrees() const {
    return embedding_dimension == expected_embedding_dimension && symmetric && !cyclotomic;
  }
};

FamilyVerdict family_verdict(const FamilyParams& p);

/// max(8(t+1)^3, 40(t+2)): the non-cyclotomicity threshold of the main theorem.
std::int64_t theorem_threshold(std::int64_t t);
/// max(16(t+1)^3, 40(t+2)): the threshold of the root-count lemma, used as the
/// precondition for certificate checks.
std::int64_t certificate_threshold(std::int64_t t);

}  // namespace cyclosemi
