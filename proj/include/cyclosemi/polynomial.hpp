#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclosemi {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with unbounded integer coefficients.
///
/// Coefficient i multiplies x^i. Trailing zeros are never stored, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t exponent);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Zero for indices past the degree.
  const BigInt& operator[](std::size_t i) const;
  const BigInt& leading() const;

  // p(x^k)
  IntPoly substitute_power(std::size_t k) const;

  BigInt evaluate(const BigInt& x) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  // Human readable, highest power first: "x^10 - x^9 + x^5 - x + 1".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b over the integers, or nullopt when b does not divide a
/// in Z[x]. Throws std::domain_error when b is zero.
std::optional<IntPoly> poly_divexact(const IntPoly& a, const IntPoly& b);

/// coeffs[i] == coeffs[deg - i] for all i. Throws std::invalid_argument on zero.
bool is_palindromic(const IntPoly& p);

}  // namespace cyclosemi
