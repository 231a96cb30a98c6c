#pragma once

#include <cstddef>
#include <vector>

#include "osk/weights.hpp"

namespace osk {

// The odd positive roots of osp(2n+1|2n) with respect to the mixed Borel,
// in canonical block order:
//
//   e_i + d_j   (1 <= i, j <= n)
//   e_i - d_j   (i <= j)
//   d_i - e_j   (i < j)
//   d_i
//
// lexicographic by (i, j) within each block; 2n^2 + n roots in total.
//
// The system carries the height functional h(e_i) = 2(n-i)+2,
// h(d_i) = 2(n-i)+1, a single strictly decreasing ladder interleaving the
// two coordinate blocks. Every root has h >= 1 (verified at construction),
// so h bounds the size of any root multiset with a prescribed sum and
// restores well-foundedness where componentwise induction fails (the root
// set contains vectors with negative entries).
class OddRootSystem {
 public:
  explicit OddRootSystem(int n);

  int rank() const { return n_; }
  const std::vector<WeightVector>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

  // Twice the height of w; exact for half-integral w, even for integral w.
  long long height_doubled(const WeightVector& w) const;
  long long root_height_doubled(std::size_t index) const { return root_h2_[index]; }

  static std::size_t expected_count(int n) {
    return 2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(n);
  }

 private:
  int n_;
  std::vector<WeightVector> roots_;
  std::vector<long long> h_delta_;  // h(d_i), integer
  std::vector<long long> h_eps_;    // h(e_i), integer
  std::vector<long long> root_h2_;
};

OddRootSystem odd_positive_roots(int n);

}  // namespace osk
