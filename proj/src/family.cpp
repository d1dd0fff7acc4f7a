#include "cyclosemi/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclosemi/cyclotomic.hpp"

namespace cyclosemi {

bool FamilyParams::valid(std::int64_t n, std::int64_t t) {
  return t >= 0 && n >= 6 * t + 2 && !(n == 2 && t == 0);
}

FamilyParams FamilyParams::make(std::int64_t n, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("family parameter t must be nonnegative");
  if (n < 6 * t + 2) {
    throw std::invalid_argument("family requires n >= 6t + 2 = " + std::to_string(6 * t + 2) +
                                ", got n = " + std::to_string(n));
  }
  if (n == 2 && t == 0) throw std::invalid_argument("S_{2,0} would be <2>, which is not a numerical semigroup");
  return {n, t};
}

std::vector<Element> family_generators(const FamilyParams& p) {
  const Element n = p.n();
  const Element t = p.t();
  std::vector<Element> gens;
  gens.reserve(static_cast<std::size_t>(n - 3 * t - 1));
  for (Element i = 0; i < t; ++i) {
    gens.push_back(n - 2 * t + 4 * i);
    gens.push_back(n - 2 * t + 4 * i + 1);
  }
  for (Element v = n + 2 * t; v <= 2 * n - 4 * t - 2; ++v) gens.push_back(v);
  for (Element j = 0; j < t; ++j) gens.push_back(2 * n - 4 * t + 4 * j - 1);
  std::sort(gens.begin(), gens.end());
  return gens;
}

NumericalSemigroup family_semigroup(const FamilyParams& p) {
  const auto gens = family_generators(p);
  return NumericalSemigroup::from_generators(gens);
}

IntPoly family_polynomial_closed_form(const FamilyParams& p) {
  const auto n = static_cast<std::size_t>(p.n());
  const auto t = static_cast<std::size_t>(p.t());
  std::vector<BigInt> c(2 * n + 1);
  c[2 * n] += 1;
  c[2 * n - 1] -= 1;
  for (std::size_t i = 0; i <= 2 * t; ++i) c[n + 2 * t - 2 * i] += (i % 2 == 0) ? 1 : -1;
  c[1] -= 1;
  c[0] += 1;
  return IntPoly(std::move(c));
}

FamilyVerdict family_verdict(const FamilyParams& p) {
  const auto s = family_semigroup(p);
  FamilyVerdict v;
  v.embedding_dimension = static_cast<std::int64_t>(s.embedding_dimension());
  v.expected_embedding_dimension = p.expected_embedding_dimension();
  v.symmetric = is_symmetric(s);
  v.cyclotomic = cyclotomic_test(semigroup_polynomial(s)).is_cyclotomic;
  return v;
}

std::int64_t theorem_threshold(std::int64_t t) {
  return std::max(8 * (t + 1) * (t + 1) * (t + 1), 40 * (t + 2));
}

std::int64_t certificate_threshold(std::int64_t t) {
  return std::max(16 * (t + 1) * (t + 1) * (t + 1), 40 * (t + 2));
}

}  // namespace cyclosemi
