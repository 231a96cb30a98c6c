#include "osk/weights.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace osk {

namespace {

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

std::vector<long long> doubled(std::vector<long long> v) {
  for (auto& x : v) x *= 2;
  return v;
}

}  // namespace

WeightVector::WeightVector(int n, std::vector<long long> delta2, std::vector<long long> eps2)
    : n_(n), delta2_(std::move(delta2)), eps2_(std::move(eps2)) {
  check_rank(n_);
  if (delta2_.size() != static_cast<std::size_t>(n_) ||
      eps2_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("coordinate sequence length must equal the rank");
}

WeightVector WeightVector::zero(int n) {
  check_rank(n);
  return WeightVector(n, std::vector<long long>(n, 0), std::vector<long long>(n, 0));
}

WeightVector WeightVector::integral(std::vector<long long> delta, std::vector<long long> eps) {
  const int n = static_cast<int>(delta.size());
  return WeightVector(n, doubled(std::move(delta)), doubled(std::move(eps)));
}

WeightVector WeightVector::from_doubled(std::vector<long long> delta2,
                                        std::vector<long long> eps2) {
  const int n = static_cast<int>(delta2.size());
  return WeightVector(n, std::move(delta2), std::move(eps2));
}

bool WeightVector::is_zero() const {
  for (auto x : delta2_)
    if (x != 0) return false;
  for (auto x : eps2_)
    if (x != 0) return false;
  return true;
}

bool WeightVector::is_integral() const {
  for (auto x : delta2_)
    if (x % 2 != 0) return false;
  for (auto x : eps2_)
    if (x % 2 != 0) return false;
  return true;
}

std::vector<long long> WeightVector::delta_int() const {
  if (!is_integral()) throw std::invalid_argument("weight is not integral");
  std::vector<long long> v(delta2_);
  for (auto& x : v) x /= 2;
  return v;
}

std::vector<long long> WeightVector::eps_int() const {
  if (!is_integral()) throw std::invalid_argument("weight is not integral");
  std::vector<long long> v(eps2_);
  for (auto& x : v) x /= 2;
  return v;
}

void WeightVector::check_same_rank(const WeightVector& o) const {
  if (n_ != o.n_) throw std::invalid_argument("rank mismatch");
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  check_same_rank(o);
  for (int i = 0; i < n_; ++i) {
    delta2_[i] += o.delta2_[i];
    eps2_[i] += o.eps2_[i];
  }
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  check_same_rank(o);
  for (int i = 0; i < n_; ++i) {
    delta2_[i] -= o.delta2_[i];
    eps2_[i] -= o.eps2_[i];
  }
  return *this;
}

WeightVector WeightVector::operator-() const {
  WeightVector r = *this;
  for (auto& x : r.delta2_) x = -x;
  for (auto& x : r.eps2_) x = -x;
  return r;
}

namespace {

// Renders coefficient*basis with basis name like "e1"; coefficient passed
// doubled. Appends "+"/"-" separators as needed.
void append_coord(std::ostringstream& out, long long c2, const char* basis, int index,
                  bool& first) {
  if (c2 == 0) return;
  long long a2 = c2;
  if (first) {
    if (a2 < 0) {
      out << "-";
      a2 = -a2;
    }
    first = false;
  } else {
    out << (a2 < 0 ? "-" : "+");
    if (a2 < 0) a2 = -a2;
  }
  if (a2 % 2 == 0) {
    if (a2 != 2) out << a2 / 2;
  } else {
    out << a2 << "/2";
  }
  out << basis << index;
}

}  // namespace

std::string WeightVector::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < n_; ++i) append_coord(out, eps2_[i], "e", i + 1, first);
  for (int i = 0; i < n_; ++i) append_coord(out, delta2_[i], "d", i + 1, first);
  if (first) return "0";
  return out.str();
}

namespace {

void check_dominant(const std::vector<long long>& v, const char* which) {
  if (v.empty()) throw std::invalid_argument("rank must be >= 1");
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1])
      throw std::invalid_argument(std::string(which) + " is not weakly decreasing");
  if (v.back() < 0) throw std::invalid_argument(std::string(which) + " has a negative entry");
}

}  // namespace

DominantWeightPair::DominantWeightPair(std::vector<long long> lam1, std::vector<long long> lam0)
    : lam1_(std::move(lam1)), lam0_(std::move(lam0)) {
  check_dominant(lam1_, "lam1");
  check_dominant(lam0_, "lam0");
  if (lam1_.size() != lam0_.size())
    throw std::invalid_argument("lam1 and lam0 must have the same rank");
}

WeightVector DominantWeightPair::combined() const {
  return WeightVector::integral(lam1_, lam0_);
}

std::string DominantWeightPair::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < lam1_.size(); ++i) out << (i ? "," : "") << lam1_[i];
  out << ";";
  for (std::size_t i = 0; i < lam0_.size(); ++i) out << (i ? "," : "") << lam0_[i];
  out << ")";
  return out.str();
}

}  // namespace osk
