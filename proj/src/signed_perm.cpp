#include "osk/signed_perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "osk/errors.hpp"

namespace osk {

namespace {

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

SignedPermutation identity_signed_perm(int n) {
  check_rank(n);
  SignedPermutation w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(n, 1);
  return w;
}

std::uint64_t hyperoctahedral_order(int n) {
  check_rank(n);
  if (n > 16) throw limit_error("hyperoctahedral order overflows 64 bits");
  return factorial(n) << n;
}

SignedPermutation signed_perm_at(int n, std::uint64_t index) {
  check_rank(n);
  if (index >= hyperoctahedral_order(n)) throw std::invalid_argument("element index out of range");
  const std::uint64_t mask = index & ((std::uint64_t{1} << n) - 1);
  std::uint64_t perm_rank = index >> n;

  // Factorial number system unrank, lexicographic on the image sequence.
  SignedPermutation w;
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto pos = static_cast<std::size_t>(perm_rank / f);
    perm_rank %= f;
    w.perm.push_back(pool[pos]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  w.signs.resize(n);
  for (int i = 0; i < n; ++i) w.signs[i] = (mask >> i) & 1 ? -1 : 1;
  return w;
}

void for_each_signed_perm(int n, const std::function<void(const SignedPermutation&)>& fn,
                          int limit) {
  check_rank(n);
  if (n > limit) throw limit_error("rank over configured enumeration limit");
  SignedPermutation w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  const std::uint64_t sign_patterns = std::uint64_t{1} << n;
  do {
    for (std::uint64_t mask = 0; mask < sign_patterns; ++mask) {
      w.signs.resize(n);
      for (int i = 0; i < n; ++i) w.signs[i] = (mask >> i) & 1 ? -1 : 1;
      fn(w);
    }
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
}

std::vector<SignedPermutation> enumerate_signed_perms(int n, int limit) {
  std::vector<SignedPermutation> out;
  out.reserve(hyperoctahedral_order(n));
  for_each_signed_perm(n, [&](const SignedPermutation& w) { out.push_back(w); }, limit);
  return out;
}

std::vector<long long> act(const SignedPermutation& w, const std::vector<long long>& v) {
  if (v.size() != w.perm.size()) throw std::invalid_argument("length mismatch");
  std::vector<long long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[static_cast<std::size_t>(w.perm[i])] = w.signs[i] * v[i];
  return out;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  const int n = a.rank();
  SignedPermutation c;
  c.perm.resize(n);
  c.signs.resize(n);
  for (int i = 0; i < n; ++i) {
    c.perm[i] = a.perm[static_cast<std::size_t>(b.perm[i])];
    c.signs[i] = b.signs[i] * a.signs[static_cast<std::size_t>(b.perm[i])];
  }
  return c;
}

int sign(const SignedPermutation& w) {
  // Permutation parity by counting inversions; fine at enumeration scales.
  int s = 1;
  const auto& p = w.perm;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  for (int x : w.signs) s *= x;
  return s;
}

}  // namespace osk
