#include <doctest.h>

#include <random>

#include "osk/errors.hpp"
#include "osk/partition_fn.hpp"
#include "osk/qpoly.hpp"

using namespace osk;

namespace {

QPolynomial poly(std::vector<long> coeffs) {
  std::vector<BigInt> c;
  for (auto x : coeffs) c.emplace_back(x);
  return QPolynomial(std::move(c));
}

}  // namespace

TEST_SUITE("partfn") {

TEST_CASE("qpolynomial canonical form and arithmetic") {
  CHECK(QPolynomial().is_zero());
  CHECK(QPolynomial().degree() == -1);
  CHECK(poly({0, 1, 0, 0}) == QPolynomial::monomial(1));
  CHECK(poly({}) == QPolynomial());

  QPolynomial p = poly({1, 2});
  p.add_shifted(poly({1, 1}), 2);
  CHECK(p == poly({1, 2, 1, 1}));
  p.add(poly({1, 2, 1, 1}), -1);
  CHECK(p.is_zero());

  CHECK(poly({1, 0, 3}).to_string() == "1 + 3q^2");
  CHECK(poly({0, 1}).to_string() == "q");
  CHECK(poly({0, -1, 1}).to_string() == "-q + q^2");
  CHECK(QPolynomial().to_string() == "0");
  CHECK(poly({2, 0, -5}).coeff_sum() == BigInt(-3));
  CHECK_FALSE(poly({1, -1}).all_nonnegative());
}

TEST_CASE("laurent normal form") {
  CHECK(LaurentPolynomial().is_zero());
  const LaurentPolynomial l(-3, poly({0, 1, 2}));
  CHECK(l.offset() == -2);
  CHECK(l.coeffs() == poly({1, 2}).coeffs());
  CHECK(l.to_string() == "q^-2 + 2q^-1");
  CHECK(LaurentPolynomial(0, QPolynomial()).offset() == 0);
  CHECK(LaurentPolynomial(-5, QPolynomial::one()).to_string() == "q^-5");
}

TEST_CASE("frozen n=1 values, dp and oracle") {
  const OddRootSystem roots = odd_positive_roots(1);
  PartitionCounter engine(roots);

  struct Example {
    long long d, e;
    QPolynomial expect;
  };
  const std::vector<Example> examples = {
      {0, 0, QPolynomial::one()},   // empty multiset only
      {1, 0, poly({0, 1})},         // {d1}
      {1, 1, poly({0, 1, 0, 1})},   // {e1+d1} and {e1-d1, d1, d1}
      {0, 1, poly({0, 0, 1})},      // {e1-d1, d1}
      {2, 0, poly({0, 0, 1})},      // {d1, d1}
      {-1, 0, QPolynomial()},       // negative height
  };
  for (const auto& ex : examples) {
    const WeightVector alpha = WeightVector::integral({ex.d}, {ex.e});
    CHECK(engine.l_poly(alpha) == ex.expect);
    CHECK(l_oracle(alpha, roots) == ex.expect);
  }
}

TEST_CASE("dp equals oracle exhaustively at n=1 and on an n=2 box") {
  {
    const OddRootSystem roots = odd_positive_roots(1);
    PartitionCounter engine(roots);
    for (long long a = -4; a <= 4; ++a)
      for (long long b = -4; b <= 4; ++b) {
        const WeightVector alpha = WeightVector::integral({a}, {b});
        if (roots.height_doubled(alpha) > 2 * 8) continue;
        CHECK(engine.l_poly(alpha) == l_oracle(alpha, roots));
      }
  }
  {
    const OddRootSystem roots = odd_positive_roots(2);
    PartitionCounter engine(roots);
    for (long long a = -2; a <= 2; ++a)
      for (long long b = -2; b <= 2; ++b)
        for (long long c = -2; c <= 2; ++c)
          for (long long d = -2; d <= 2; ++d) {
            const WeightVector alpha = WeightVector::integral({a, b}, {c, d});
            if (roots.height_doubled(alpha) > 2 * 8) continue;
            CHECK(engine.l_poly(alpha) == l_oracle(alpha, roots));
          }
  }
}

TEST_CASE("support bound, nonnegativity, and the sum rule") {
  const OddRootSystem roots = odd_positive_roots(2);
  PartitionCounter engine(roots);
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<long long> coord(-3, 3);
  int sampled = 0;
  while (sampled < 60) {
    const WeightVector alpha =
        WeightVector::integral({coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    const long long h2 = roots.height_doubled(alpha);
    if (h2 > 2 * 8) continue;
    ++sampled;
    const QPolynomial p = engine.l_poly(alpha);
    CHECK(p.all_nonnegative());
    if (!p.is_zero()) CHECK(2 * p.degree() <= h2);  // support bounded by the height
    if (h2 < 0) CHECK(p.is_zero());
    CHECK(p.coeff_sum() == partition_count_oracle(alpha, roots));
  }
}

TEST_CASE("membership search agrees with the counting engine") {
  const OddRootSystem roots = odd_positive_roots(2);
  PartitionCounter engine(roots);
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= 2; ++b)
      for (long long c = -2; c <= 2; ++c) {
        const WeightVector alpha = WeightVector::integral({a, b}, {c, 0});
        CHECK(engine.in_positive_span(alpha) == !engine.l_poly(alpha).is_zero());
      }
}

TEST_CASE("error paths and limits") {
  const OddRootSystem roots = odd_positive_roots(1);
  PartitionCounter engine(roots);
  CHECK_THROWS_AS(engine.l_poly(WeightVector::from_doubled({1}, {0})), std::invalid_argument);
  CHECK_THROWS_AS(engine.l_poly(WeightVector::zero(2)), std::invalid_argument);
  // h(13 d1) = 13 over the default oracle budget of 12.
  CHECK_THROWS_AS(l_oracle(WeightVector::integral({13}, {0}), roots), limit_error);
  CHECK_NOTHROW(l_oracle(WeightVector::integral({12}, {0}), roots));
}

TEST_CASE("batch table agrees with the per-weight engine") {
  for (int n = 1; n <= 2; ++n) {
    const OddRootSystem roots = odd_positive_roots(n);
    PartitionCounter engine(roots);
    const PartitionTable table(roots, 2 * 8);
    const long long box = (n == 1) ? 4 : 2;
    std::vector<long long> coords(2 * static_cast<std::size_t>(n), -box);
    while (true) {
      const WeightVector alpha = WeightVector::integral(
          std::vector<long long>(coords.begin(), coords.begin() + n),
          std::vector<long long>(coords.begin() + n, coords.end()));
      if (roots.height_doubled(alpha) <= 2 * 8) CHECK(table.l_poly(alpha) == engine.l_poly(alpha));
      std::size_t pos = 0;
      while (pos < coords.size() && coords[pos] == box) coords[pos++] = -box;
      if (pos == coords.size()) break;
      ++coords[pos];
    }
  }

  const OddRootSystem roots = odd_positive_roots(1);
  const PartitionTable table(roots, 6);
  CHECK(table.l_poly(WeightVector::integral({-2}, {0})).is_zero());
  CHECK_THROWS_AS(table.l_poly(WeightVector::integral({10}, {0})), std::invalid_argument);
  CHECK_THROWS_AS(PartitionTable(odd_positive_roots(2), 40, 8), limit_error);
}

TEST_CASE("memo cap zero falls back to uncached recursion") {
  const OddRootSystem roots = odd_positive_roots(2);
  PartitionCounter cached(roots);
  PartitionCounter uncached(roots, 0);
  for (long long a = 0; a <= 2; ++a)
    for (long long b = 0; b <= 2; ++b) {
      const WeightVector alpha = WeightVector::integral({a, b}, {1, 0});
      CHECK(cached.l_poly(alpha) == uncached.l_poly(alpha));
    }
}

}  // TEST_SUITE
