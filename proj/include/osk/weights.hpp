#pragma once

#include <string>
#include <vector>

namespace osk {

// Point of t* + t0*: delta-side coordinates carry Sp(2n) weights, eps-side
// coordinates carry SO(2n+1) weights. Coordinates are stored doubled so
// that half-integral vectors such as rho0 are exact; a weight is integral
// iff every doubled entry is even.
class WeightVector {
 public:
  static WeightVector zero(int n);
  // From plain integer coordinates (an integral weight).
  static WeightVector integral(std::vector<long long> delta, std::vector<long long> eps);
  // From doubled coordinates (may be half-integral).
  static WeightVector from_doubled(std::vector<long long> delta2, std::vector<long long> eps2);

  int rank() const { return n_; }
  const std::vector<long long>& delta2() const { return delta2_; }
  const std::vector<long long>& eps2() const { return eps2_; }

  bool is_zero() const;
  bool is_integral() const;
  std::vector<long long> delta_int() const;  // requires is_integral()
  std::vector<long long> eps_int() const;    // requires is_integral()

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  WeightVector operator-() const;

  bool operator==(const WeightVector&) const = default;

  // Algebraic form, e.g. "e1+d1", "2d1-e2", "1/2e1"; zero renders as "0".
  std::string to_string() const;

 private:
  WeightVector(int n, std::vector<long long> delta2, std::vector<long long> eps2);
  void check_same_rank(const WeightVector& o) const;

  int n_ = 0;
  std::vector<long long> delta2_;
  std::vector<long long> eps2_;
};

// Dominant integral pair (lam1, lam0): lam1 a dominant weight of Sp(2n) on
// the delta side, lam0 a dominant weight of SO(2n+1) on the eps side (the
// SO lattice, so plain integers; spin weights excluded). Both sequences
// weakly decreasing and nonnegative.
class DominantWeightPair {
 public:
  DominantWeightPair(std::vector<long long> lam1, std::vector<long long> lam0);

  int rank() const { return static_cast<int>(lam1_.size()); }
  const std::vector<long long>& lam1() const { return lam1_; }
  const std::vector<long long>& lam0() const { return lam0_; }

  // The pair as a single point of t* + t0*.
  WeightVector combined() const;

  bool operator==(const DominantWeightPair&) const = default;
  std::string to_string() const;

 private:
  std::vector<long long> lam1_;
  std::vector<long long> lam0_;
};

}  // namespace osk
