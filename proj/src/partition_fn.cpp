#include "osk/partition_fn.hpp"

#include <limits>
#include <stdexcept>

#include "osk/errors.hpp"

namespace osk {

namespace {

std::vector<long long> flatten(const WeightVector& w) {
  std::vector<long long> out;
  out.reserve(2 * static_cast<std::size_t>(w.rank()));
  out.insert(out.end(), w.delta2().begin(), w.delta2().end());
  out.insert(out.end(), w.eps2().begin(), w.eps2().end());
  return out;
}

bool all_zero(const std::vector<long long>& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

PartitionCounter::PartitionCounter(OddRootSystem roots, std::size_t memo_cap)
    : roots_(std::move(roots)), memo_cap_(memo_cap) {
  const int n = roots_.rank();
  for (const auto& r : roots_.roots()) root_coords2_.push_back(flatten(r));
  h_coeffs_.resize(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    h_coeffs_[static_cast<std::size_t>(i)] = 2 * (n - (i + 1)) + 1;      // h(d_i)
    h_coeffs_[static_cast<std::size_t>(n + i)] = 2 * (n - (i + 1)) + 2;  // h(e_i)
  }
}

long long PartitionCounter::height2_of(const std::vector<long long>& coords2) const {
  long long h2 = 0;
  for (std::size_t i = 0; i < coords2.size(); ++i) h2 += h_coeffs_[i] * coords2[i];
  return h2;
}

bool PartitionCounter::make_key(std::size_t index, const std::vector<long long>& remaining2,
                                StateKey& out) const {
  if (remaining2.size() + 1 > kMaxKeyWords) return false;
  constexpr long long kMax = std::numeric_limits<std::int32_t>::max();
  out.words[0] = static_cast<std::int32_t>(index);
  for (std::size_t i = 0; i < remaining2.size(); ++i) {
    if (remaining2[i] > kMax || remaining2[i] < -kMax) return false;
    out.words[i + 1] = static_cast<std::int32_t>(remaining2[i]);
  }
  out.len = static_cast<std::uint32_t>(remaining2.size() + 1);
  return true;
}

void PartitionCounter::validate(const WeightVector& alpha) const {
  if (alpha.rank() != roots_.rank()) throw std::invalid_argument("rank mismatch");
  if (!alpha.is_integral()) throw std::invalid_argument("alpha must be integral");
}

QPolynomial PartitionCounter::l_poly(const WeightVector& alpha) {
  validate(alpha);
  const auto coords = flatten(alpha);
  return count_from(0, coords, height2_of(coords));
}

QPolynomial PartitionCounter::count_from(std::size_t index,
                                         const std::vector<long long>& remaining2,
                                         long long h2) {
  if (all_zero(remaining2)) return QPolynomial::one();
  // Any nonempty multiset has height >= 1.
  if (h2 < 2) return QPolynomial();
  if (index == root_coords2_.size()) return QPolynomial();

  QPolynomial result;
  const auto& root = root_coords2_[index];
  const long long root_h2 = roots_.root_height_doubled(index);
  std::vector<long long> rem = remaining2;
  long long rem_h2 = h2;
  // Multiplicity k of this root: k = 0, 1, ..., while height stays >= 0.
  // Child values are accumulated straight out of the memo to avoid
  // copying coefficient vectors on hits.
  StateKey key;
  for (int k = 0;; ++k) {
    if (rem_h2 < 2) {
      // Trivial child (empty remainder or dead height); no memo entry.
      result.add_shifted(count_from(index + 1, rem, rem_h2), k);
    } else if (make_key(index + 1, rem, key)) {
      if (auto it = poly_memo_.find(key); it != poly_memo_.end()) {
        result.add_shifted(it->second, k);
      } else {
        QPolynomial child = count_from(index + 1, rem, rem_h2);
        result.add_shifted(child, k);
        if (poly_memo_.size() < memo_cap_) poly_memo_.emplace(key, std::move(child));
      }
    } else {
      result.add_shifted(count_from(index + 1, rem, rem_h2), k);
    }
    if (rem_h2 < root_h2) break;
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= root[i];
    rem_h2 -= root_h2;
  }
  return result;
}

bool PartitionCounter::in_positive_span(const WeightVector& alpha) {
  validate(alpha);
  const auto coords = flatten(alpha);
  return exists_from(0, coords, height2_of(coords));
}

bool PartitionCounter::exists_from(std::size_t index, const std::vector<long long>& remaining2,
                                   long long h2) {
  if (all_zero(remaining2)) return true;
  if (h2 < 2) return false;
  if (index == root_coords2_.size()) return false;

  StateKey key;
  const bool keyed = make_key(index, remaining2, key);
  if (keyed) {
    if (auto it = span_memo_.find(key); it != span_memo_.end()) return it->second;
  }

  bool found = false;
  const auto& root = root_coords2_[index];
  const long long root_h2 = roots_.root_height_doubled(index);
  std::vector<long long> rem = remaining2;
  long long rem_h2 = h2;
  for (int k = 0; !found; ++k) {
    found = exists_from(index + 1, rem, rem_h2);
    if (rem_h2 < root_h2) break;
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= root[i];
    rem_h2 -= root_h2;
  }

  if (keyed && span_memo_.size() < memo_cap_) span_memo_.emplace(key, found);
  return found;
}

PartitionTable::PartitionTable(const OddRootSystem& roots, long long height2_max,
                               std::size_t state_cap)
    : roots_(roots), height2_max_(height2_max) {
  if (height2_max_ < 0) height2_max_ = 0;
  if (2 * static_cast<std::size_t>(roots_.rank()) > 16)
    throw limit_error("rank over partition table limit");

  const int n = roots_.rank();
  const std::size_t bucket_count = static_cast<std::size_t>(height2_max_ / 2) + 1;
  // Buckets of state coordinates by height; propagation from height h
  // lands strictly above h, so one ascending pass per root covers every
  // multiplicity of that root.
  std::vector<std::vector<std::vector<long long>>> buckets(bucket_count);

  const std::vector<long long> origin(2 * static_cast<std::size_t>(n), 0);
  CoordKey key;
  pack(origin, key);
  index_.emplace(key, 0);
  store_.push_back(QPolynomial::one());
  // Bucket entries carry the store index alongside the coordinates.
  std::vector<std::vector<std::pair<std::vector<long long>, std::uint32_t>>> indexed(
      bucket_count);
  indexed[0].emplace_back(origin, 0);

  std::vector<long long> root2(2 * static_cast<std::size_t>(n));
  for (std::size_t ri = 0; ri < roots_.size(); ++ri) {
    const auto& r = roots_.roots()[ri];
    for (int i = 0; i < n; ++i) {
      root2[static_cast<std::size_t>(i)] = r.delta2()[static_cast<std::size_t>(i)];
      root2[static_cast<std::size_t>(n + i)] = r.eps2()[static_cast<std::size_t>(i)];
    }
    const long long rh2 = roots_.root_height_doubled(ri);
    for (long long h2 = 0; h2 + rh2 <= height2_max_; h2 += 2) {
      auto& bucket = indexed[static_cast<std::size_t>(h2 / 2)];
      // The pass may append to the target bucket (strictly higher), never
      // to this one; plain index iteration is sound.
      for (std::size_t bi = 0; bi < bucket.size(); ++bi) {
        std::vector<long long> target = bucket[bi].first;
        for (std::size_t c = 0; c < target.size(); ++c) target[c] += root2[c];
        CoordKey dst_key;
        if (!pack(target, dst_key)) throw limit_error("partition table key overflow");
        auto [it, inserted] = index_.try_emplace(
            dst_key, static_cast<std::uint32_t>(store_.size()));
        if (inserted) {
          if (index_.size() > state_cap)
            throw limit_error("partition table over enumeration limit");
          store_.emplace_back();
        }
        // Deque references are stable, so the source polynomial can be
        // read in place while the target is updated.
        store_[it->second].add_shifted(store_[bucket[bi].second], 1);
        if (inserted)
          indexed[static_cast<std::size_t>((h2 + rh2) / 2)].emplace_back(std::move(target),
                                                                         it->second);
      }
    }
  }
}

bool PartitionTable::pack(const std::vector<long long>& coords2, CoordKey& out) {
  if (coords2.size() > 16) return false;
  constexpr long long kMax = std::numeric_limits<std::int32_t>::max();
  for (std::size_t i = 0; i < coords2.size(); ++i) {
    if (coords2[i] > kMax || coords2[i] < -kMax) return false;
    out.words[i] = static_cast<std::int32_t>(coords2[i]);
  }
  out.len = static_cast<std::uint32_t>(coords2.size());
  return true;
}

const QPolynomial& PartitionTable::l_poly(const WeightVector& alpha) const {
  if (alpha.rank() != roots_.rank()) throw std::invalid_argument("rank mismatch");
  if (!alpha.is_integral()) throw std::invalid_argument("alpha must be integral");
  const long long h2 = roots_.height_doubled(alpha);
  if (h2 < 0) return zero_;
  if (h2 > height2_max_) throw std::invalid_argument("weight above the table height bound");
  CoordKey key;
  if (!pack(flatten(alpha), key)) return zero_;
  const auto it = index_.find(key);
  return it == index_.end() ? zero_ : store_[it->second];
}

namespace {

struct OracleState {
  const OddRootSystem* roots;
  std::vector<BigInt> counts;  // counts[d] = multisets of size d found so far
};

// Nondecreasing sequences of root indices; remaining height budget prunes.
void oracle_recurse(OracleState& st, std::size_t min_index, std::vector<long long>& rem2,
                    long long rem_h2, std::size_t depth) {
  if (all_zero(rem2)) {
    if (st.counts.size() <= depth) st.counts.resize(depth + 1, BigInt(0));
    st.counts[depth] += 1;
    // Extensions of an exact decomposition die on the height bound.
    return;
  }
  if (rem_h2 < 2) return;
  const auto& roots = st.roots->roots();
  for (std::size_t i = min_index; i < roots.size(); ++i) {
    const long long rh2 = st.roots->root_height_doubled(i);
    if (rh2 > rem_h2) continue;  // heights are not monotone across blocks
    const auto& r = roots[i];
    for (int c = 0; c < st.roots->rank(); ++c) {
      rem2[static_cast<std::size_t>(c)] -= r.delta2()[static_cast<std::size_t>(c)];
      rem2[static_cast<std::size_t>(st.roots->rank() + c)] -=
          r.eps2()[static_cast<std::size_t>(c)];
    }
    oracle_recurse(st, i, rem2, rem_h2 - rh2, depth + 1);
    for (int c = 0; c < st.roots->rank(); ++c) {
      rem2[static_cast<std::size_t>(c)] += r.delta2()[static_cast<std::size_t>(c)];
      rem2[static_cast<std::size_t>(st.roots->rank() + c)] +=
          r.eps2()[static_cast<std::size_t>(c)];
    }
  }
}

std::vector<BigInt> oracle_counts(const WeightVector& alpha, const OddRootSystem& roots,
                                  long long oracle_bound) {
  if (alpha.rank() != roots.rank()) throw std::invalid_argument("rank mismatch");
  if (!alpha.is_integral()) throw std::invalid_argument("alpha must be integral");
  const long long h2 = roots.height_doubled(alpha);
  if (h2 > 2 * oracle_bound) throw limit_error("height budget over oracle bound");

  OracleState st;
  st.roots = &roots;
  std::vector<long long> rem2;
  rem2.insert(rem2.end(), alpha.delta2().begin(), alpha.delta2().end());
  rem2.insert(rem2.end(), alpha.eps2().begin(), alpha.eps2().end());
  oracle_recurse(st, 0, rem2, h2, 0);
  return st.counts;
}

}  // namespace

QPolynomial l_oracle(const WeightVector& alpha, const OddRootSystem& roots,
                     long long oracle_bound) {
  return QPolynomial(oracle_counts(alpha, roots, oracle_bound));
}

BigInt partition_count_oracle(const WeightVector& alpha, const OddRootSystem& roots,
                              long long oracle_bound) {
  BigInt total(0);
  for (const auto& c : oracle_counts(alpha, roots, oracle_bound)) total += c;
  return total;
}

}  // namespace osk
