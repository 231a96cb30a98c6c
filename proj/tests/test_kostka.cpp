#include <doctest.h>

#include <random>

#include "osk/dominance.hpp"
#include "osk/errors.hpp"
#include "osk/kostka.hpp"
#include "osk/partition_fn.hpp"
#include "osk/root_systems.hpp"

using namespace osk;

namespace {

std::vector<std::vector<long long>> dominant_vectors(int n, long long max_coord) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long cap) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= cap; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, max_coord);
  return out;
}

// The full rank-1 Weyl expansion spelled out by hand: both groups have the
// two elements {1, sign flip}, so K is a signed sum of four oracle values.
QPolynomial kostka_n1_by_hand(long long lam1, long long lam0, long long mu1, long long mu0) {
  const OddRootSystem roots = odd_positive_roots(1);
  QPolynomial total;
  for (int sw : {1, -1}) {
    for (int sw0 : {1, -1}) {
      // w(lam1 + rho) - rho - mu1 with rho = d1; doubled eps side keeps
      // rho0 = e1/2 exact.
      const long long arg_d = sw * (lam1 + 1) - 1 - mu1;
      const long long arg_e2 = sw0 * (2 * lam0 + 1) - 1 - 2 * mu0;
      REQUIRE(arg_e2 % 2 == 0);
      const WeightVector arg = WeightVector::integral({arg_d}, {arg_e2 / 2});
      if (roots.height_doubled(arg) < 0) continue;
      total.add(l_oracle(arg, roots, 64), sw * sw0);
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("kostka") {

TEST_CASE("worked rank-1 values against the hand expansion") {
  const DominantWeightPair zero({0}, {0});

  const QPolynomial k10 = kostka_poly(DominantWeightPair({1}, {0}), zero);
  CHECK(k10 == QPolynomial::monomial(1));
  CHECK(k10 == kostka_n1_by_hand(1, 0, 0, 0));

  const QPolynomial k01 = kostka_poly(DominantWeightPair({0}, {1}), zero);
  CHECK(k01 == QPolynomial::monomial(2));
  CHECK(k01 == kostka_n1_by_hand(0, 1, 0, 0));

  // At rank 1 the flip terms always die on the height bound, so K reduces
  // to a single partition-function value.
  const QPolynomial k11 = kostka_poly(DominantWeightPair({1}, {1}), zero);
  QPolynomial expect;
  expect.add(QPolynomial::monomial(1));
  expect.add(QPolynomial::monomial(3));
  CHECK(k11 == expect);
  CHECK(k11 == kostka_n1_by_hand(1, 1, 0, 0));
}

TEST_CASE("normalization K(lam,lam) = 1") {
  // The height functional is strictly maximal at the dominant point of a
  // hyperoctahedral orbit, so every non-identity term vanishes and only
  // L(0) = 1 survives.
  for (int n = 1; n <= 3; ++n) {
    for (const auto& l1 : dominant_vectors(n, 3))
      for (const auto& l0 : dominant_vectors(n, 3)) {
        const DominantWeightPair lam(l1, l0);
        CHECK(kostka_poly(lam, lam) == QPolynomial::one());
      }
  }
}

TEST_CASE("support and positivity on the rank-1 grid") {
  PartitionCounter engine(odd_positive_roots(1));
  for (const auto& l1 : dominant_vectors(1, 2))
    for (const auto& l0 : dominant_vectors(1, 2))
      for (const auto& m1 : dominant_vectors(1, 2))
        for (const auto& m0 : dominant_vectors(1, 2)) {
          const DominantWeightPair lam(l1, l0), mu(m1, m0);
          const QPolynomial k = kostka_poly(lam, mu);
          CHECK(k.all_nonnegative());
          if (!dominance_ge(lam, mu, engine)) CHECK(k.is_zero());
          if (!k.is_zero()) CHECK(support_check(lam, mu));
        }
}

TEST_CASE("rank-2 spot values stay consistent across jobs and routes") {
  std::mt19937 rng(421);
  std::uniform_int_distribution<long long> c(0, 2);
  for (int trial = 0; trial < 8; ++trial) {
    auto draw = [&]() {
      long long a = c(rng), b = c(rng);
      if (a < b) std::swap(a, b);
      return std::vector<long long>{a, b};
    };
    const DominantWeightPair lam(draw(), draw()), mu(draw(), draw());
    KostkaOptions seq;
    KostkaOptions par;
    par.jobs = 4;
    KostkaOptions table_route;
    table_route.route = KostkaRoute::kTable;
    KostkaOptions engine_route;
    engine_route.route = KostkaRoute::kEngine;
    const QPolynomial k = kostka_poly(lam, mu, seq);
    CHECK(k == kostka_poly(lam, mu, par));
    CHECK(k == kostka_poly(lam, mu, table_route));
    CHECK(k == kostka_poly(lam, mu, engine_route));
  }
}

TEST_CASE("rank-3 route agreement") {
  const DominantWeightPair lam({1, 0, 0}, {1, 0, 0});
  const DominantWeightPair mu({0, 0, 0}, {0, 0, 0});
  KostkaOptions table_route;
  table_route.route = KostkaRoute::kTable;
  KostkaOptions engine_route;
  engine_route.route = KostkaRoute::kEngine;
  const QPolynomial k = kostka_poly(lam, mu);
  CHECK(k == kostka_poly(lam, mu, table_route));
  CHECK(k == kostka_poly(lam, mu, engine_route));
  CHECK(k.all_nonnegative());
  CHECK_FALSE(k.is_zero());
}

TEST_CASE("stalk poincare polynomials") {
  const DominantWeightPair lam({1}, {0});
  const DominantWeightPair zero({0}, {0});
  CHECK(stalk_poincare(lam, lam, 7) == LaurentPolynomial(-7, QPolynomial::one()));
  CHECK(stalk_poincare(lam, zero, 0) == LaurentPolynomial(-1, QPolynomial::one()));
  // K = q + q^3 inverts to q^-3 + q^-1, then shifts by the orbit dimension.
  QPolynomial k11;
  k11.add(QPolynomial::monomial(0));
  k11.add(QPolynomial::monomial(2));
  CHECK(stalk_poincare(DominantWeightPair({1}, {1}), zero, 2) ==
        LaurentPolynomial(-5, k11));
  // Vanishing K gives the zero stalk.
  CHECK(stalk_poincare(zero, lam, 3).is_zero());
  CHECK_THROWS_AS(stalk_poincare(lam, zero, -1), std::invalid_argument);
}

TEST_CASE("error paths") {
  const DominantWeightPair a({1}, {0});
  const DominantWeightPair b({1, 0}, {0, 0});
  CHECK_THROWS_AS(kostka_poly(a, b), std::invalid_argument);
  KostkaOptions opts;
  opts.max_rank = 1;
  CHECK_THROWS_AS(kostka_poly(b, b, opts), limit_error);
  CHECK_THROWS_AS(support_check(a, b), std::invalid_argument);
}

}  // TEST_SUITE
