#include "cyclosemi/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclosemi {

namespace {
const BigInt kZero = 0;
}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
  std::vector<BigInt> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return IntPoly(std::move(coeffs));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPoly IntPoly::substitute_power(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return IntPoly(std::move(out));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> IntPoly::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + it->convert_to<double>();
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

std::optional<IntPoly> poly_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divexact: division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<BigInt> rem = a.coeffs();
  const auto& divisor = b.coeffs();
  const std::size_t db = divisor.size() - 1;
  const BigInt& lead = divisor.back();
  const bool unit_lead = lead == 1 || lead == -1;
  std::vector<BigInt> quot(rem.size() - db);

  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    BigInt q;
    if (unit_lead) {
      q = lead == 1 ? top : BigInt(-top);
    } else {
      BigInt r;
      boost::multiprecision::divide_qr(top, lead, q, r);
      if (r != 0) return std::nullopt;
    }
    for (std::size_t j = 0; j <= db; ++j) {
      if (divisor[j] != 0) rem[k + j] -= q * divisor[j];
    }
    quot[k] = std::move(q);
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

bool is_palindromic(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_palindromic: zero polynomial");
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

}  // namespace cyclosemi
