#pragma once

#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "cyclosemi/semigroup.hpp"

namespace cyclosemi {

/// A vertex of the semigroup tree. Membership is a bitset over a fixed
/// window; every integer at or beyond the window is a member.
class SemigroupNode {
 public:
  static constexpr int kWindow = 256;

  /// The whole of Z_{>=0}: genus 0, Frobenius -1.
  static SemigroupNode root();

  int genus() const { return genus_; }
  int frobenius() const { return frobenius_; }
  int multiplicity() const { return multiplicity_; }

  bool contains(int v) const { return v >= 0 && (v >= kWindow || bits_[static_cast<std::size_t>(v)]); }
  std::vector<Element> gaps() const;
  /// Ascending; all lie in [m, F + m].
  std::vector<Element> minimal_generators() const;
  /// Minimal generators above the Frobenius number: removing any one of them
  /// yields a child of genus + 1.
  std::vector<int> child_generators() const;
  SemigroupNode remove_generator(int g) const;

 private:
  std::bitset<kWindow> bits_;
  int genus_ = 0;
  int frobenius_ = -1;
  int multiplicity_ = 1;
};

/// Genus bound supported by the node window (F + m <= 3g must fit).
inline constexpr int kMaxCensusGenus = 80;

/// Depth-first walk of every semigroup of genus <= max_genus, each exactly
/// once. The visitor returns false to abort the walk; the function returns
/// false if it was aborted.
bool enumerate_by_genus(int max_genus, const std::function<bool(const SemigroupNode&)>& visitor);

struct NodeClassification {
  int genus = 0;
  int embedding_dimension = 0;
  bool symmetric = false;             // palindromic P_S
  bool symmetric_by_reflection = false;
  bool symmetric_by_genus = false;
  bool cyclotomic = false;
};

NodeClassification classify(const SemigroupNode& node);

struct CensusRow {
  int genus = 0;
  int embedding_dimension = 0;
  std::int64_t total = 0;
  std::int64_t symmetric = 0;
  std::int64_t cyclotomic = 0;

  std::int64_t symmetric_not_cyclotomic() const { return symmetric - cyclotomic; }
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

class CensusTable {
 public:
  void add(const NodeClassification& c);
  /// Sums counts; commutative and associative.
  void merge(const CensusTable& other);

  /// Sorted by genus, then embedding dimension.
  std::vector<CensusRow> rows() const;
  std::vector<std::int64_t> totals_by_genus() const;

  std::int64_t nodes() const { return nodes_; }
  // Nodes whose three symmetry criteria disagree.
  std::int64_t symmetry_disagreements() const { return symmetry_disagreements_; }
  // Nodes with e <= 3 where symmetric != cyclotomic.
  std::int64_t low_dimension_mismatches() const { return low_dimension_mismatches_; }

  bool partial = false;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;

 private:
  std::map<std::pair<int, int>, CensusRow> rows_;
  std::int64_t nodes_ = 0;
  std::int64_t symmetry_disagreements_ = 0;
  std::int64_t low_dimension_mismatches_ = 0;
};

struct CensusOptions {
  int max_genus = 0;
  unsigned workers = 1;
  // Stop after this many nodes and flag the table partial; 0 = unlimited.
  std::int64_t node_limit = 0;
};

/// Classifies every semigroup up to max_genus. With several workers the tree
/// is cut at a fixed genus and the subtrees below it are dealt out
/// round-robin; per-worker tables are merged at the end.
/// Throws std::invalid_argument when max_genus is negative or above
/// kMaxCensusGenus.
CensusTable run_census(const CensusOptions& options);

/// True iff no semigroup of genus <= max_genus and embedding dimension <= 3
/// is symmetric without being cyclotomic, or vice versa.
bool verify_low_dimension_equivalence(int max_genus, unsigned workers = 1);

}  // namespace cyclosemi
