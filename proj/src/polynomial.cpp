#include "commring/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "commring/error.hpp"

namespace commring {

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> ascending)
    : coeffs_(std::move(ascending)) {
  trim();
}

IntegerPolynomial IntegerPolynomial::from_ints(const std::vector<long>& ascending) {
  std::vector<mpz_class> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::monomial(std::size_t degree) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] = 1;
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::linear(long root) { return from_ints({-root, 1}); }

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntegerPolynomial::coefficient(std::size_t i) const {
  static const mpz_class zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

std::size_t IntegerPolynomial::degree() const {
  return coeffs_.empty() ? 0 : coeffs_.size() - 1;
}

bool IntegerPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

mpz_class IntegerPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntegerPolynomial IntegerPolynomial::deflate(const mpz_class& root) const {
  if (coeffs_.size() < 2) throw Error(ErrorCode::InvalidArgument, "cannot deflate a constant");
  // synthetic division, highest degree first
  std::vector<mpz_class> quotient(coeffs_.size() - 1);
  mpz_class carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * root;
    quotient[i - 1] = carry;
  }
  if (coeffs_[0] + carry * root != 0)
    throw Error(ErrorCode::InvalidArgument, "deflation by a non-root");
  return IntegerPolynomial(std::move(quotient));
}

IntegerPolynomial IntegerPolynomial::pow(unsigned exponent) const {
  IntegerPolynomial result = from_ints({1});
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntegerPolynomial(std::move(c));
}

std::string IntegerPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

}  // namespace commring
