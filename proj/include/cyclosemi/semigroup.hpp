#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclosemi/polynomial.hpp"

namespace cyclosemi {

using Element = std::int64_t;

/// A numerical semigroup given by generators, with its membership table,
/// gap set and Frobenius number resolved at construction.
///
/// The membership table covers [0, F + max(generator) + 1]; everything above
/// F is a member regardless.
class NumericalSemigroup {
 public:
  /// Throws std::invalid_argument for an empty list, a non-positive entry or
  /// gcd != 1, and std::length_error when the table would exceed
  /// kMaxTableSize entries.
  static NumericalSemigroup from_generators(std::span<const Element> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Element> gens) {
    return from_generators(std::span<const Element>(gens.begin(), gens.size()));
  }

  static constexpr std::size_t kMaxTableSize = std::size_t{1} << 28;

  // Sorted, deduplicated input generators.
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Element>& minimal_generators() const { return minimal_; }
  const std::vector<Element>& gaps() const { return gaps_; }

  bool contains(Element v) const;
  Element frobenius() const { return frobenius_; }
  std::size_t genus() const { return gaps_.size(); }
  Element multiplicity() const { return minimal_.front(); }
  std::size_t embedding_dimension() const { return minimal_.size(); }
  std::size_t table_size() const { return member_.size(); }

 private:
  NumericalSemigroup() = default;

  std::vector<Element> generators_;
  std::vector<Element> minimal_;
  std::vector<Element> gaps_;
  std::vector<char> member_;
  Element frobenius_ = -1;
};

std::vector<Element> minimal_generating_set(const NumericalSemigroup& s);
std::size_t embedding_dimension(const NumericalSemigroup& s);

/// P_S(x) = 1 + (x - 1) * sum_{g in gaps} x^g.
IntPoly semigroup_polynomial(const NumericalSemigroup& s);
IntPoly polynomial_from_gaps(std::span<const Element> gaps);

/// Independent route: (1 - x) times the Hilbert series truncated past F + 1,
/// with the telescoping tail folded in.
IntPoly semigroup_polynomial_via_hilbert(const NumericalSemigroup& s);

/// Palindromic semigroup polynomial.
bool is_symmetric(const NumericalSemigroup& s);
/// x in S <=> F - x not in S, for 0 <= x <= F.
bool symmetric_by_gap_reflection(const NumericalSemigroup& s);
/// genus == (F + 1) / 2.
bool symmetric_by_genus(const NumericalSemigroup& s);

/// Least member in each residue class mod m, indexed by residue.
/// Throws std::invalid_argument when m is not a positive member.
std::vector<Element> apery_set(const NumericalSemigroup& s, Element m);
inline std::vector<Element> apery_set(const NumericalSemigroup& s) {
  return apery_set(s, s.multiplicity());
}

}  // namespace cyclosemi
