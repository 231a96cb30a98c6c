#pragma once

#include <string>
#include <vector>

#include "osk/bigint.hpp"

namespace osk {

// Polynomial in q with exact integer coefficients; coeffs()[d] is the
// coefficient of q^d. Canonical form: no trailing zero coefficients, and
// the zero polynomial is the empty coefficient sequence.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial one() { return monomial(0); }
  static QPolynomial monomial(int degree, BigInt coeff = BigInt(1));

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int d) const;

  // *this += sign * q^shift * other.  shift >= 0.
  void add_shifted(const QPolynomial& other, int shift, int sign = 1);
  void add(const QPolynomial& other, int sign = 1) { add_shifted(other, 0, sign); }

  BigInt coeff_sum() const;
  bool all_nonnegative() const;

  bool operator==(const QPolynomial&) const = default;

  // Human form: "0", "1", "q + q^3", "2q^2 - q^4".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Laurent polynomial sum_i coeffs()[i] * q^(offset + i). Normal form: the
// lowest stored coefficient is nonzero (offset absorbs low-order zeros) and
// the zero polynomial has offset 0. Only stalk Poincare series produce
// negative exponents.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int offset, QPolynomial poly);

  bool is_zero() const { return poly_.is_zero(); }
  int offset() const { return offset_; }
  const QPolynomial& poly() const { return poly_; }
  const std::vector<BigInt>& coeffs() const { return poly_.coeffs(); }

  bool operator==(const LaurentPolynomial&) const = default;
  std::string to_string() const;

 private:
  int offset_ = 0;
  QPolynomial poly_;
};

}  // namespace osk
