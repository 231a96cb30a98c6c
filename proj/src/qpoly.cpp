#include "osk/qpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace osk {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPolynomial QPolynomial::monomial(int degree, BigInt coeff) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  if (coeff == 0) return QPolynomial();
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, BigInt(0));
  c.back() = std::move(coeff);
  QPolynomial p;
  p.coeffs_ = std::move(c);
  return p;
}

BigInt QPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(d)];
}

void QPolynomial::add_shifted(const QPolynomial& other, int shift, int sign) {
  if (shift < 0) throw std::invalid_argument("negative shift");
  if (other.is_zero()) return;
  const std::size_t need = other.coeffs_.size() + static_cast<std::size_t>(shift);
  if (coeffs_.size() < need) coeffs_.resize(need, BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    if (sign >= 0)
      coeffs_[i + shift] += other.coeffs_[i];
    else
      coeffs_[i + shift] -= other.coeffs_[i];
  }
  trim();
}

BigInt QPolynomial::coeff_sum() const {
  BigInt s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool QPolynomial::all_nonnegative() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

void append_term(std::ostringstream& out, const BigInt& c, int d, bool first) {
  BigInt a = c;
  if (first) {
    if (a < 0) {
      out << "-";
      a = -a;
    }
  } else {
    out << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  if (a != 1 || d == 0) out << a.get_str();
  if (d >= 1) {
    out << "q";
    if (d > 1) out << "^" << d;
  }
}

}  // namespace

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] == 0) continue;
    append_term(out, coeffs_[d], static_cast<int>(d), first);
    first = false;
  }
  return out.str();
}

LaurentPolynomial::LaurentPolynomial(int offset, QPolynomial poly)
    : offset_(offset), poly_(std::move(poly)) {
  if (poly_.is_zero()) {
    offset_ = 0;
    return;
  }
  // Absorb low-order zero coefficients into the offset.
  std::size_t low = 0;
  const auto& c = poly_.coeffs();
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) {
    std::vector<BigInt> rest(c.begin() + static_cast<std::ptrdiff_t>(low), c.end());
    poly_ = QPolynomial(std::move(rest));
    offset_ += static_cast<int>(low);
  }
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = poly_.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const int d = offset_ + static_cast<int>(i);
    BigInt a = c[i];
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1 || d == 0) out << a.get_str();
    if (d != 0) {
      out << "q";
      if (d != 1) out << "^" << d;
    }
    first = false;
  }
  return out.str();
}

}  // namespace osk
