#include "cyclosemi/census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "cyclosemi/cyclotomic.hpp"

namespace cyclosemi {

SemigroupNode SemigroupNode::root() {
  SemigroupNode node;
  node.bits_.set();
  return node;
}

std::vector<Element> SemigroupNode::gaps() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (int v = 1; v <= frobenius_; ++v) {
    if (!bits_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<Element> SemigroupNode::minimal_generators() const {
  std::vector<Element> out;
  const int m = multiplicity_;
  for (int x = m; x <= std::max(frobenius_ + m, m); ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (int a = m; 2 * a <= x && !decomposable; ++a) decomposable = contains(a) && contains(x - a);
    if (!decomposable) out.push_back(x);
  }
  return out;
}

std::vector<int> SemigroupNode::child_generators() const {
  std::vector<int> out;
  for (Element g : minimal_generators()) {
    if (g > frobenius_) out.push_back(static_cast<int>(g));
  }
  return out;
}

SemigroupNode SemigroupNode::remove_generator(int g) const {
  if (g <= frobenius_ || g + multiplicity_ + 1 >= kWindow) {
    throw std::invalid_argument("remove_generator: " + std::to_string(g) + " is not removable here");
  }
  SemigroupNode child = *this;
  child.bits_.reset(static_cast<std::size_t>(g));
  child.genus_ = genus_ + 1;
  child.frobenius_ = g;
  // Everything above g stays a member, so g + 1 is the next candidate.
  if (g == multiplicity_) child.multiplicity_ = g + 1;
  return child;
}

namespace {

void check_genus(int max_genus) {
  if (max_genus < 0 || max_genus > kMaxCensusGenus) {
    throw std::invalid_argument("max genus must lie in [0, " + std::to_string(kMaxCensusGenus) + "], got " +
                                std::to_string(max_genus));
  }
}

bool walk(const SemigroupNode& start, int max_genus, const std::function<bool(const SemigroupNode&)>& visitor) {
  std::vector<SemigroupNode> stack{start};
  while (!stack.empty()) {
    SemigroupNode node = std::move(stack.back());
    stack.pop_back();
    if (!visitor(node)) return false;
    if (node.genus() >= max_genus) continue;
    for (int g : node.child_generators()) stack.push_back(node.remove_generator(g));
  }
  return true;
}

}  // namespace

bool enumerate_by_genus(int max_genus, const std::function<bool(const SemigroupNode&)>& visitor) {
  check_genus(max_genus);
  return walk(SemigroupNode::root(), max_genus, visitor);
}

NodeClassification classify(const SemigroupNode& node) {
  NodeClassification c;
  c.genus = node.genus();
  c.embedding_dimension = static_cast<int>(node.minimal_generators().size());
  const auto gaps = node.gaps();
  const IntPoly poly = polynomial_from_gaps(gaps);
  c.symmetric = is_palindromic(poly);
  const int f = node.frobenius();
  c.symmetric_by_reflection = true;
  for (int x = 0; x <= f && c.symmetric_by_reflection; ++x) {
    c.symmetric_by_reflection = node.contains(x) != node.contains(f - x);
  }
  c.symmetric_by_genus = 2 * node.genus() == f + 1;
  c.cyclotomic = cyclotomic_test(poly).is_cyclotomic;
  return c;
}

void CensusTable::add(const NodeClassification& c) {
  auto [it, inserted] = rows_.try_emplace({c.genus, c.embedding_dimension});
  CensusRow& row = it->second;
  if (inserted) {
    row.genus = c.genus;
    row.embedding_dimension = c.embedding_dimension;
  }
  ++row.total;
  row.symmetric += c.symmetric;
  row.cyclotomic += c.cyclotomic;
  ++nodes_;
  if (c.symmetric != c.symmetric_by_reflection || c.symmetric != c.symmetric_by_genus) ++symmetry_disagreements_;
  if (c.embedding_dimension <= 3 && c.symmetric != c.cyclotomic) ++low_dimension_mismatches_;
}

void CensusTable::merge(const CensusTable& other) {
  for (const auto& [key, row] : other.rows_) {
    auto [it, inserted] = rows_.try_emplace(key, row);
    if (inserted) continue;
    it->second.total += row.total;
    it->second.symmetric += row.symmetric;
    it->second.cyclotomic += row.cyclotomic;
  }
  nodes_ += other.nodes_;
  symmetry_disagreements_ += other.symmetry_disagreements_;
  low_dimension_mismatches_ += other.low_dimension_mismatches_;
  partial = partial || other.partial;
}

std::vector<CensusRow> CensusTable::rows() const {
  std::vector<CensusRow> out;
  out.reserve(rows_.size());
  for (const auto& [key, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::int64_t> CensusTable::totals_by_genus() const {
  std::vector<std::int64_t> totals;
  for (const auto& [key, row] : rows_) {
    const auto g = static_cast<std::size_t>(key.first);
    if (totals.size() <= g) totals.resize(g + 1, 0);
    totals[g] += row.total;
  }
  return totals;
}

CensusTable run_census(const CensusOptions& options) {
  check_genus(options.max_genus);
  const unsigned workers = std::max(1U, options.workers);
  std::atomic<std::int64_t> budget_used{0};
  std::atomic<bool> exhausted{false};

  const auto classify_into = [&](CensusTable& table) {
    return [&options, &budget_used, &exhausted, out = &table](const SemigroupNode& node) {
      if (options.node_limit > 0 && budget_used.fetch_add(1) >= options.node_limit) {
        exhausted = true;
        return false;
      }
      out->add(classify(node));
      return true;
    };
  };

  CensusTable result;
  if (workers == 1) {
    walk(SemigroupNode::root(), options.max_genus, classify_into(result));
    result.partial = exhausted.load();
    return result;
  }

  // Shallow levels are classified here; subtrees rooted at the cut are shared out.
  const int cut = std::min(options.max_genus, 6);
  std::vector<SemigroupNode> frontier;
  walk(SemigroupNode::root(), cut, [&](const SemigroupNode& node) {
    if (node.genus() == cut) {
      frontier.push_back(node);
      return true;
    }
    return classify_into(result)(node);
  });

  std::vector<CensusTable> partials(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      auto visitor = classify_into(partials[w]);
      for (std::size_t i = w; i < frontier.size(); i += workers) {
        if (exhausted.load() || !walk(frontier[i], options.max_genus, visitor)) break;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& part : partials) result.merge(part);
  result.partial = exhausted.load();
  return result;
}

bool verify_low_dimension_equivalence(int max_genus, unsigned workers) {
  const CensusTable table = run_census({max_genus, workers, 0});
  return table.low_dimension_mismatches() == 0;
}

}  // namespace cyclosemi
