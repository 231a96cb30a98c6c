#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace osk {

// Element of the hyperoctahedral group B_n: a permutation of {0..n-1}
// together with one sign per source coordinate. Acts on coordinate
// sequences by (w.v)[perm[i]] = signs[i] * v[i], so signs apply to the
// source coordinate before placement.
struct SignedPermutation {
  std::vector<int> perm;      // perm[i] = image slot of source slot i
  std::vector<int> signs;     // +1 or -1 per source slot

  int rank() const { return static_cast<int>(perm.size()); }
  bool operator==(const SignedPermutation&) const = default;
};

SignedPermutation identity_signed_perm(int n);

// 2^n * n!.
std::uint64_t hyperoctahedral_order(int n);

// Element at position `index` of the canonical enumeration: permutations in
// lexicographic order (outer), sign patterns as n-bit counters (inner; bit i
// set means signs[i] = -1).
SignedPermutation signed_perm_at(int n, std::uint64_t index);

// Streams the canonical enumeration; each element exactly once. Throws
// limit_error for n above `limit` (group sizes explode).
void for_each_signed_perm(int n, const std::function<void(const SignedPermutation&)>& fn,
                          int limit = 8);

std::vector<SignedPermutation> enumerate_signed_perms(int n, int limit = 8);

// (w.v)[perm[i]] = signs[i] * v[i]; lengths must match.
std::vector<long long> act(const SignedPermutation& w, const std::vector<long long>& v);

// Composition: act(compose(a, b), v) == act(a, act(b, v)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

// Determinant of the signed permutation matrix: permutation parity times
// the product of signs; equals (-1)^length(w).
int sign(const SignedPermutation& w);

}  // namespace osk
