#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "osk/odd_roots.hpp"
#include "osk/qpoly.hpp"
#include "osk/weights.hpp"

namespace osk {

// q-graded vector partition function over the odd positive roots: the
// coefficient of q^d in l_poly(alpha) is the number of unordered
// d-element multisets of roots (repetition allowed) summing to alpha.
// l_poly(0) = 1 (the empty multiset); l_poly(alpha) = 0 exactly when alpha
// is not a nonnegative-integer combination of the roots.
//
// Depth-first over roots in canonical order with memoization keyed by
// (root index, remaining weight); a remainder with negative height admits
// no decomposition since every root has h >= 1. The memo table is capped;
// beyond the cap (or at ranks whose keys do not pack) recursion continues
// uncached.
class PartitionCounter {
 public:
  static constexpr std::size_t kDefaultMemoCap = std::size_t{1} << 21;

  explicit PartitionCounter(OddRootSystem roots, std::size_t memo_cap = kDefaultMemoCap);

  const OddRootSystem& roots() const { return roots_; }

  QPolynomial l_poly(const WeightVector& alpha);

  // True iff alpha lies in the N-span of the roots (alpha = 0 included).
  // Same bounded search as l_poly with early exit on the first witness.
  bool in_positive_span(const WeightVector& alpha);

 private:
  // Memo key: root index followed by the doubled remaining coordinates,
  // packed flat. Covers ranks up to 8; larger ranks recurse uncached.
  static constexpr std::size_t kMaxKeyWords = 17;
  struct StateKey {
    std::array<std::int32_t, kMaxKeyWords> words;
    std::uint32_t len = 0;

    bool operator==(const StateKey& o) const {
      if (len != o.len) return false;
      for (std::uint32_t i = 0; i < len; ++i)
        if (words[i] != o.words[i]) return false;
      return true;
    }
  };
  struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
      std::uint64_t h = 1469598103934665603ull;
      for (std::uint32_t i = 0; i < k.len; ++i) {
        h ^= static_cast<std::uint32_t>(k.words[i]);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  bool make_key(std::size_t index, const std::vector<long long>& remaining2,
                StateKey& out) const;
  QPolynomial count_from(std::size_t index, const std::vector<long long>& remaining2,
                         long long h2);
  bool exists_from(std::size_t index, const std::vector<long long>& remaining2, long long h2);

  long long height2_of(const std::vector<long long>& coords2) const;
  void validate(const WeightVector& alpha) const;

  OddRootSystem roots_;
  std::vector<std::vector<long long>> root_coords2_;  // delta2 then eps2, flattened
  std::vector<long long> h_coeffs_;                   // per flattened coordinate
  std::size_t memo_cap_;
  std::unordered_map<StateKey, QPolynomial, StateKeyHash> poly_memo_;
  std::unordered_map<StateKey, bool, StateKeyHash> span_memo_;
};

// Batch variant of the partition function: all L values with height up to
// height2_max/2, built in one unbounded-knapsack sweep over the roots in
// canonical order (states bucketed by height; every propagation appends
// strictly higher, so one ascending pass per root realizes unlimited
// multiplicity). Serves the double Weyl sum as read-only lookups from a
// single shared table; safe for concurrent queries.
class PartitionTable {
 public:
  PartitionTable(const OddRootSystem& roots, long long height2_max,
                 std::size_t state_cap = std::size_t{1} << 22);

  const OddRootSystem& roots() const { return roots_; }
  long long height2_max() const { return height2_max_; }
  std::size_t size() const { return index_.size(); }

  // L_alpha for integral alpha with height <= height2_max; the zero
  // polynomial for weights outside the generated cone.
  const QPolynomial& l_poly(const WeightVector& alpha) const;

 private:
  struct CoordKey {
    std::array<std::int32_t, 16> words;
    std::uint32_t len = 0;

    bool operator==(const CoordKey& o) const {
      if (len != o.len) return false;
      for (std::uint32_t i = 0; i < len; ++i)
        if (words[i] != o.words[i]) return false;
      return true;
    }
  };
  struct CoordKeyHash {
    std::size_t operator()(const CoordKey& k) const {
      std::uint64_t h = 1469598103934665603ull;
      for (std::uint32_t i = 0; i < k.len; ++i) {
        h ^= static_cast<std::uint32_t>(k.words[i]);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  static bool pack(const std::vector<long long>& coords2, CoordKey& out);

  OddRootSystem roots_;
  long long height2_max_;
  // Polynomials live in a deque so references stay valid while the index
  // grows during construction.
  std::unordered_map<CoordKey, std::uint32_t, CoordKeyHash> index_;
  std::deque<QPolynomial> store_;
  QPolynomial zero_;
};

// Independent brute-force oracle with the same contract as l_poly:
// exhaustively enumerates nondecreasing root-index sequences within the
// height budget h(alpha). Throws limit_error when h(alpha) exceeds
// oracle_bound.
QPolynomial l_oracle(const WeightVector& alpha, const OddRootSystem& roots,
                     long long oracle_bound = 12);

// Ungraded partition count by direct enumeration; cross-checks the sum of
// l_poly coefficients. Same budget guard as l_oracle.
BigInt partition_count_oracle(const WeightVector& alpha, const OddRootSystem& roots,
                              long long oracle_bound = 12);

}  // namespace osk
