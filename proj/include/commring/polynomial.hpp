#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace commring {

/// Dense polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree. The zero polynomial has no coefficients.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<mpz_class> ascending);
  static IntegerPolynomial from_ints(const std::vector<long>& ascending);
  static IntegerPolynomial monomial(std::size_t degree);
  /// x - root
  static IntegerPolynomial linear(long root);

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  const mpz_class& coefficient(std::size_t i) const;
  std::size_t degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const;

  mpz_class evaluate(const mpz_class& x) const;
  /// Divides by (x - root); requires root to be a root.
  IntegerPolynomial deflate(const mpz_class& root) const;
  IntegerPolynomial pow(unsigned exponent) const;

  /// e.g. "x^3 - 3x - 2"
  std::string str() const;

  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
  bool operator==(const IntegerPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace commring
