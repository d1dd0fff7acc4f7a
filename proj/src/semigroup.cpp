#include "cyclosemi/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclosemi {

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Element> gens) {
  if (gens.empty()) throw std::invalid_argument("semigroup needs at least one generator");
  Element g = 0;
  for (Element x : gens) {
    if (x <= 0) throw std::invalid_argument("generators must be positive, got " + std::to_string(x));
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw std::invalid_argument("generators have gcd " + std::to_string(g) +
                                "; the complement would be infinite");
  }

  NumericalSemigroup s;
  s.generators_.assign(gens.begin(), gens.end());
  std::sort(s.generators_.begin(), s.generators_.end());
  s.generators_.erase(std::unique(s.generators_.begin(), s.generators_.end()), s.generators_.end());
  const Element smallest = s.generators_.front();
  const Element largest = s.generators_.back();

  // Once `smallest` consecutive members appear, every later integer is a member.
  std::vector<char>& member = s.member_;
  member.push_back(1);
  Element run = 1;
  Element v = 0;
  while (run < smallest) {
    ++v;
    if (static_cast<std::size_t>(v) >= kMaxTableSize) {
      throw std::length_error("membership table exceeds " + std::to_string(kMaxTableSize) + " entries");
    }
    char in = 0;
    for (Element gen : s.generators_) {
      if (gen > v) break;
      if (member[static_cast<std::size_t>(v - gen)]) {
        in = 1;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  s.frobenius_ = v - run;

  const auto table_end = static_cast<std::size_t>(s.frobenius_ + largest + 2);
  if (table_end > kMaxTableSize) {
    throw std::length_error("membership table exceeds " + std::to_string(kMaxTableSize) + " entries");
  }
  member.resize(table_end, 1);

  for (Element x = 1; x <= s.frobenius_; ++x) {
    if (!member[static_cast<std::size_t>(x)]) s.gaps_.push_back(x);
  }

  for (Element gen : s.generators_) {
    bool decomposable = false;
    for (Element a = 1; 2 * a <= gen && !decomposable; ++a) {
      decomposable = s.contains(a) && s.contains(gen - a);
    }
    if (!decomposable) s.minimal_.push_back(gen);
  }
  return s;
}

bool NumericalSemigroup::contains(Element v) const {
  if (v < 0) return false;
  if (v > frobenius_) return true;
  return member_[static_cast<std::size_t>(v)] != 0;
}

std::vector<Element> minimal_generating_set(const NumericalSemigroup& s) { return s.minimal_generators(); }

std::size_t embedding_dimension(const NumericalSemigroup& s) { return s.embedding_dimension(); }

IntPoly polynomial_from_gaps(std::span<const Element> gaps) {
  if (gaps.empty()) return IntPoly{1};
  const auto top = static_cast<std::size_t>(*std::max_element(gaps.begin(), gaps.end()));
  std::vector<BigInt> c(top + 2);
  c[0] = 1;
  for (Element g : gaps) {
    const auto i = static_cast<std::size_t>(g);
    c[i + 1] += 1;
    c[i] -= 1;
  }
  return IntPoly(std::move(c));
}

IntPoly semigroup_polynomial(const NumericalSemigroup& s) { return polynomial_from_gaps(s.gaps()); }

IntPoly semigroup_polynomial_via_hilbert(const NumericalSemigroup& s) {
  // H_S = sum_{v <= F, v in S} x^v + x^(F+1) / (1 - x); multiplying by (1 - x)
  // turns the tail into the single term x^(F+1).
  const auto cutoff = static_cast<std::size_t>(s.frobenius() + 1);
  std::vector<BigInt> hilbert(cutoff);
  for (std::size_t v = 0; v < cutoff; ++v) hilbert[v] = s.contains(static_cast<Element>(v)) ? 1 : 0;
  IntPoly truncated(std::move(hilbert));
  return IntPoly{1, -1} * truncated + IntPoly::monomial(1, cutoff);
}

bool is_symmetric(const NumericalSemigroup& s) { return is_palindromic(semigroup_polynomial(s)); }

bool symmetric_by_gap_reflection(const NumericalSemigroup& s) {
  const Element f = s.frobenius();
  for (Element x = 0; x <= f; ++x) {
    if (s.contains(x) == s.contains(f - x)) return false;
  }
  return true;
}

bool symmetric_by_genus(const NumericalSemigroup& s) {
  return 2 * static_cast<Element>(s.genus()) == s.frobenius() + 1;
}

std::vector<Element> apery_set(const NumericalSemigroup& s, Element m) {
  if (m <= 0 || !s.contains(m)) {
    throw std::invalid_argument("apery_set: " + std::to_string(m) + " is not a nonzero member");
  }
  std::vector<Element> result(static_cast<std::size_t>(m), -1);
  Element filled = 0;
  for (Element v = 0; filled < m; ++v) {
    auto& slot = result[static_cast<std::size_t>(v % m)];
    if (slot < 0 && s.contains(v)) {
      slot = v;
      ++filled;
    }
  }
  return result;
}

}  // namespace cyclosemi
