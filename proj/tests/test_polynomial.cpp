#include <map>
#include <random>
#include <vector>

#include "cyclosemi/cyclotomic.hpp"
#include "cyclosemi/polynomial.hpp"
#include "gtest/gtest.h"

namespace cyclosemi {
namespace {

// Plain O(n^2) convolution on machine integers; test-only oracle.
std::vector<long long> naive_convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Schoolbook division by a monic divisor; returns (quotient, remainder).
std::pair<std::vector<long long>, std::vector<long long>> naive_divmod(std::vector<long long> a,
                                                                         const std::vector<long long>& b) {
  std::vector<long long> q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1];
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  a.resize(b.size() - 1);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return {q, a};
}

IntPoly from_ll(const std::vector<long long>& v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return IntPoly(std::move(c));
}

TEST(IntPolyTest, CanonicalFormDropsTrailingZeros) {
  IntPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(IntPoly({0, 0}).is_zero());
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ((IntPoly{1, 1} - IntPoly{1, 1}).coeffs().size(), 0u);
}

TEST(IntPolyTest, ToString) {
  EXPECT_EQ((IntPoly{1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1}).to_string(), "x^10 - x^9 + x^5 - x + 1");
  EXPECT_EQ((IntPoly{-3, 0, 2}).to_string(), "2x^2 - 3");
  EXPECT_EQ(IntPoly().to_string(), "0");
}

TEST(PolyMulTest, Telescoping) { EXPECT_EQ(poly_mul(IntPoly{1, -1}, IntPoly{1, 1, 1}), (IntPoly{1, 0, 0, -1})); }

TEST(PolyMulTest, Identity) { EXPECT_EQ(poly_mul(IntPoly{-1, 1}, IntPoly{1}), (IntPoly{-1, 1})); }

TEST(PolyMulTest, Phi6TimesPhi1MatchesConvolution) {
  const auto expected = naive_convolve({1, -1, 1}, {-1, 1});
  EXPECT_EQ(expected, (std::vector<long long>{-1, 2, -2, 1}));
  EXPECT_EQ(poly_mul(IntPoly{1, -1, 1}, IntPoly{-1, 1}), from_ll(expected));
}

TEST(PolyMulTest, NoOverflowOnLargeCoefficients) {
  IntPoly p{1, 1};
  for (int i = 0; i < 7; ++i) p = p * p;  // (1 + x)^128
  // C(128, 64) exceeds 64 bits.
  EXPECT_EQ(p[64].str(), "23951146041928082866135587776380551750");
}

TEST(PolyDivExactTest, GeometricFactorization) {
  auto q = poly_divexact(IntPoly{-1, 0, 0, 1}, IntPoly{-1, 1});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, (IntPoly{1, 1, 1}));
}

TEST(PolyDivExactTest, NonzeroRemainderAtOne) {
  EXPECT_FALSE(poly_divexact(IntPoly{1, -1, 1}, IntPoly{-1, 1}));
}

TEST(PolyDivExactTest, FamilyPolynomialByPhi6AgreesWithLongDivision) {
  const std::vector<long long> a{1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1};
  const auto [quot, rem] = naive_divmod(a, {1, -1, 1});
  EXPECT_EQ(rem, (std::vector<long long>{3, -3}));
  EXPECT_EQ(quot, (std::vector<long long>{-2, 0, 2, 2, 0, -1, -1, 0, 1}));
  EXPECT_FALSE(poly_divexact(from_ll(a), IntPoly{1, -1, 1}));
  // Multiplying back the long-division quotient is exact.
  auto q = poly_divexact(from_ll(a) - from_ll(rem), IntPoly{1, -1, 1});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, from_ll(quot));
}

TEST(PolyDivExactTest, NonMonicDivisor) {
  auto q = poly_divexact(IntPoly{2, 6, 4}, IntPoly{2, 2});  // (2 + 2x)(1 + 2x)
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, (IntPoly{1, 2}));
  EXPECT_FALSE(poly_divexact(IntPoly{1, 1}, IntPoly{1, 2}));
}

TEST(PolyDivExactTest, ZeroCases) {
  EXPECT_THROW(poly_divexact(IntPoly{1}, IntPoly{}), std::domain_error);
  auto q = poly_divexact(IntPoly{}, IntPoly{1, 1});
  ASSERT_TRUE(q);
  EXPECT_TRUE(q->is_zero());
  EXPECT_FALSE(poly_divexact(IntPoly{1, 1}, IntPoly{1, 0, 1}));
}

TEST(CyclotomicTest, SmallIndices) {
  EXPECT_EQ(cyclotomic(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (IntPoly{1, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (IntPoly{1, 0, -1, 0, 1}));
  EXPECT_THROW(cyclotomic(0), std::invalid_argument);
}

TEST(CyclotomicTest, Phi105HasACoefficientMinusTwo) {
  const std::vector<long long> expected{1,  1,  1,  0, 0, -1, -1, -2, -1, -1, 0, 0,  1, 1,  1,  1,  1,
                                        1,  0,  0,  -1, 0, -1, 0, -1, 0, -1, 0, -1, 0, 0,  1,  1,  1,
                                        1,  1,  1,  0, 0, -1, -1, -2, -1, -1, 0, 0,  1, 1,  1};
  EXPECT_EQ(cyclotomic(105), from_ll(expected));
}

TEST(CyclotomicTest, ProductOverDivisorsIsXdMinusOne) {
  for (std::uint64_t d = 1; d <= 200; ++d) {
    IntPoly product{1};
    for (std::uint64_t e = 1; e <= d; ++e) {
      if (d % e == 0) product *= cyclotomic(e);
    }
    EXPECT_EQ(product, IntPoly::monomial(1, d) - IntPoly{1}) << "d = " << d;
    EXPECT_EQ(cyclotomic(d).degree(), static_cast<int>(euler_phi(d))) << "d = " << d;
  }
}

TEST(TotientTest, TableMatchesDirect) {
  const auto table = totient_table(1000);
  for (std::uint64_t d = 1; d <= 1000; ++d) EXPECT_EQ(table[d], euler_phi(d));
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(36), 12u);
}

TEST(PalindromeTest, Examples) {
  EXPECT_TRUE(is_palindromic(IntPoly{1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1}));
  EXPECT_TRUE(is_palindromic(IntPoly{1}));
  EXPECT_FALSE(is_palindromic(IntPoly{-1, 1, 1}));
  EXPECT_THROW(is_palindromic(IntPoly{}), std::invalid_argument);
}

TEST(CyclotomicDecisionTest, Phi6) {
  const auto r = cyclotomic_test(IntPoly{1, -1, 1});
  EXPECT_TRUE(r.is_cyclotomic);
  EXPECT_EQ(r.factors, (std::vector<CyclotomicFactor>{{6, 1}}));
  EXPECT_TRUE(r.remainder.is_one());
}

TEST(CyclotomicDecisionTest, FivePolynomialIsNotCyclotomic) {
  const IntPoly p{1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1};
  const auto r = cyclotomic_test(p);
  EXPECT_FALSE(r.is_cyclotomic);
  EXPECT_TRUE(r.factors.empty());
  EXPECT_EQ(r.remainder, p);
}

TEST(CyclotomicDecisionTest, ConstantsAndZero) {
  const auto one = cyclotomic_test(IntPoly{1});
  EXPECT_TRUE(one.is_cyclotomic);
  EXPECT_TRUE(one.factors.empty());
  EXPECT_FALSE(cyclotomic_test(IntPoly{-1}).is_cyclotomic);
  EXPECT_THROW(cyclotomic_test(IntPoly{}), std::invalid_argument);
}

TEST(CyclotomicDecisionTest, NonMonicInputStillPeels) {
  const auto r = cyclotomic_test(IntPoly{-2, 2});  // 2 * Phi_1
  EXPECT_FALSE(r.is_cyclotomic);
  EXPECT_EQ(r.factors, (std::vector<CyclotomicFactor>{{1, 1}}));
  EXPECT_EQ(r.remainder, IntPoly{2});
}

TEST(CyclotomicDecisionTest, RepeatedFactorsAndNegatedProduct) {
  const IntPoly p = cyclotomic(3) * cyclotomic(3) * cyclotomic(3) * cyclotomic(10);
  const auto r = cyclotomic_test(p);
  EXPECT_TRUE(r.is_cyclotomic);
  EXPECT_EQ(r.factors, (std::vector<CyclotomicFactor>{{3, 3}, {10, 1}}));
  const auto neg = cyclotomic_test(IntPoly{} - p);
  EXPECT_FALSE(neg.is_cyclotomic);
  EXPECT_EQ(neg.remainder, IntPoly{-1});
}

// Random multisets of cyclotomic indices with phi(d) small enough to keep the
// product degree <= 24.
struct RandomProduct {
  std::map<std::uint64_t, unsigned> multiset;
  IntPoly poly{1};
};

RandomProduct random_cyclotomic_product(std::mt19937_64& rng, int max_degree) {
  RandomProduct out;
  std::uniform_int_distribution<std::uint64_t> pick(1, 60);
  std::uniform_int_distribution<int> count(0, 5);
  int degree = 0;
  const int factors = count(rng);
  for (int i = 0; i < factors; ++i) {
    const std::uint64_t d = pick(rng);
    const int phi = static_cast<int>(euler_phi(d));
    if (degree + phi > max_degree) continue;
    degree += phi;
    ++out.multiset[d];
    out.poly *= cyclotomic(d);
  }
  return out;
}

std::vector<CyclotomicFactor> as_factors(const std::map<std::uint64_t, unsigned>& m) {
  std::vector<CyclotomicFactor> out;
  for (const auto& [d, k] : m) out.push_back({d, k});
  return out;
}

TEST(CyclotomicDecisionTest, RoundTripRandomProducts) {
  std::mt19937_64 rng(20240607);
  for (int trial = 0; trial < 200; ++trial) {
    const auto prod = random_cyclotomic_product(rng, 24);
    const auto r = cyclotomic_test(prod.poly);
    EXPECT_TRUE(r.is_cyclotomic) << prod.poly.to_string();
    EXPECT_EQ(r.factors, as_factors(prod.multiset)) << prod.poly.to_string();
    EXPECT_EQ(r.reconstruct(), prod.poly);
    bool only_d_ge_2 = prod.multiset.count(1) == 0;
    if (only_d_ge_2) EXPECT_TRUE(is_palindromic(prod.poly)) << prod.poly.to_string();
  }
}

TEST(CyclotomicDecisionTest, CrossValidationWithNonCyclotomicFactors) {
  const std::vector<IntPoly> irreducible_non_cyclotomic{
      {-1, -1, 1},                          // x^2 - x - 1
      {-1, -1, 0, 1},                       // x^3 - x - 1
      {1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1},  // Lehmer's polynomial
      {1, 3, 1},                            // x^2 + 3x + 1
      {2, 1},                               // x + 2
  };
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> which(0, irreducible_non_cyclotomic.size());
  for (int trial = 0; trial < 200; ++trial) {
    const auto prod = random_cyclotomic_product(rng, 14);
    const std::size_t k = which(rng);
    const bool tainted = k < irreducible_non_cyclotomic.size();
    const IntPoly extra = tainted ? irreducible_non_cyclotomic[k] : IntPoly{1};
    const IntPoly p = prod.poly * extra;
    const auto r = cyclotomic_test(p);
    EXPECT_EQ(r.is_cyclotomic, !tainted) << p.to_string();
    EXPECT_EQ(r.factors, as_factors(prod.multiset)) << p.to_string();
    EXPECT_EQ(r.remainder, extra);
    EXPECT_EQ(r.reconstruct(), p);
  }
}

TEST(CyclotomicDecisionTest, RemainderHasNoCyclotomicDivisor) {
  const IntPoly p = cyclotomic(7) * cyclotomic(9) * IntPoly{-1, -1, 1} * IntPoly{-1, -1, 0, 1};
  const auto r = cyclotomic_test(p);
  ASSERT_FALSE(r.is_cyclotomic);
  const auto deg = static_cast<std::uint64_t>(r.remainder.degree());
  for (std::uint64_t d = 1; d <= 2 * deg * deg; ++d) {
    if (euler_phi(d) > deg) continue;
    EXPECT_FALSE(poly_divexact(r.remainder, cyclotomic(d))) << "d = " << d;
  }
}

TEST(CyclotomicDecisionTest, LargeIndexFactorsAreFound) {
  const IntPoly p = cyclotomic(210) * cyclotomic(150) * cyclotomic(66);
  const auto r = cyclotomic_test(p);
  EXPECT_TRUE(r.is_cyclotomic);
  EXPECT_EQ(r.factors, (std::vector<CyclotomicFactor>{{66, 1}, {150, 1}, {210, 1}}));
}

}  // namespace
}  // namespace cyclosemi
