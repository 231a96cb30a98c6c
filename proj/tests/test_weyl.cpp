#include <doctest.h>

#include <set>

#include "osk/errors.hpp"
#include "osk/signed_perm.hpp"

using namespace osk;

namespace {

SignedPermutation make(std::vector<int> perm, std::vector<int> signs) {
  SignedPermutation w;
  w.perm = std::move(perm);
  w.signs = std::move(signs);
  return w;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("enumeration yields exactly 2^n n! distinct elements") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::uint64_t count = 0;
    for_each_signed_perm(n, [&](const SignedPermutation& w) {
      ++count;
      seen.insert({w.perm, w.signs});
    });
    CHECK(count == hyperoctahedral_order(n));
    CHECK(seen.size() == count);
  }
  CHECK(hyperoctahedral_order(1) == 2);
  CHECK(hyperoctahedral_order(2) == 8);
  CHECK(hyperoctahedral_order(3) == 48);
  CHECK_THROWS_AS(for_each_signed_perm(9, [](const SignedPermutation&) {}), limit_error);
}

TEST_CASE("unranking matches the stream order") {
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t index = 0;
    for_each_signed_perm(n, [&](const SignedPermutation& w) {
      CHECK(signed_perm_at(n, index) == w);
      ++index;
    });
  }
  CHECK_THROWS_AS(signed_perm_at(2, 8), std::invalid_argument);
}

TEST_CASE("action examples") {
  CHECK(act(identity_signed_perm(2), {3, 1}) == std::vector<long long>({3, 1}));
  CHECK(act(make({0, 1}, {-1, 1}), {3, 1}) == std::vector<long long>({-3, 1}));
  // Swap, then flip the new first coordinate: (3,1) -> (1,3) -> (-1,3).
  const SignedPermutation swap12 = make({1, 0}, {1, 1});
  const SignedPermutation flip1 = make({0, 1}, {-1, 1});
  CHECK(act(flip1, act(swap12, {3, 1})) == std::vector<long long>({-1, 3}));
  CHECK(act(compose(flip1, swap12), {3, 1}) == std::vector<long long>({-1, 3}));
  CHECK_THROWS_AS(act(identity_signed_perm(2), {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("composition law holds exhaustively at n=3") {
  const auto elems = enumerate_signed_perms(3);
  const std::vector<long long> v = {5, -2, 7};
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(act(compose(a, b), v) == act(a, act(b, v)));
}

TEST_CASE("action preserves the multiset of absolute values") {
  const std::vector<long long> v = {4, -1, 0};
  for (const auto& w : enumerate_signed_perms(3)) {
    std::multiset<long long> before, after;
    for (auto x : v) before.insert(x < 0 ? -x : x);
    for (auto x : act(w, v)) after.insert(x < 0 ? -x : x);
    CHECK(before == after);
  }
}

TEST_CASE("sign values and homomorphism") {
  CHECK(sign(identity_signed_perm(3)) == 1);
  CHECK(sign(make({0, 1}, {-1, 1})) == -1);
  CHECK(sign(make({1, 0}, {1, 1})) == -1);

  const auto elems = enumerate_signed_perms(3);
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(sign(compose(a, b)) == sign(a) * sign(b));
}

TEST_CASE("signs sum to zero") {
  for (int n = 1; n <= 4; ++n) {
    long long total = 0;
    for_each_signed_perm(n, [&](const SignedPermutation& w) { total += sign(w); });
    CHECK(total == 0);
  }
}

}  // TEST_SUITE
