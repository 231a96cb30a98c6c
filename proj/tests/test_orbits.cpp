#include <doctest.h>

#include <random>

#include "osk/dominance.hpp"
#include "osk/errors.hpp"
#include "osk/orbits.hpp"

using namespace osk;

namespace {

using Seq = std::vector<long long>;

std::vector<Seq> all_partitions(int length, long long bound) {
  std::vector<Seq> out;
  Seq cur;
  auto rec = [&](auto&& self, long long cap) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= cap; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, bound);
  return out;
}

}  // namespace

TEST_SUITE("orbits") {

TEST_CASE("dual signature") {
  CHECK(dual_signature({3, 1, 0, -2}) == Seq({2, 0, -1, -3}));
  CHECK(dual_signature({0, 0, 0}) == Seq({0, 0, 0}));
  CHECK_THROWS_AS(dual_signature({1, 2}), std::invalid_argument);

  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> step(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Seq s(6);
    s[0] = step(rng) + 2;
    for (int i = 1; i < 6; ++i) s[static_cast<std::size_t>(i)] =
        s[static_cast<std::size_t>(i - 1)] - step(rng);
    const Seq d = dual_signature(s);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i] >= d[i + 1]);
    CHECK(dual_signature(d) == s);
  }
}

TEST_CASE("bisignatures") {
  const Bisignature b = make_bisignature({3, 1, 0, -2}, {1, 1, 0, 0});
  CHECK(dual_bisignature(dual_bisignature(b)) == b);
  CHECK(dual_bisignature(b).lam == Seq({2, 0, -1, -3}));
  CHECK_THROWS_AS(make_bisignature({1, 2}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_bisignature({1, 0, 0}, {0, 0, 0}), std::invalid_argument);

  // Orbit labels land on the self-dual locus.
  const Bisignature sd = label_to_bisignature(make_orbit_label({2, 1}, {1, 0}));
  CHECK(sd.lam == Seq({2, 1, -1, -2}));
  CHECK(sd.nu == Seq({1, 0, 0, -1}));
  CHECK(dual_bisignature(sd) == sd);
}

TEST_CASE("self-dual signatures biject with partitions") {
  CHECK(partition_to_selfdual({1, 0}) == Seq({1, 0, 0, -1}));
  CHECK(partition_to_selfdual({0, 0, 0}) == Seq({0, 0, 0, 0, 0, 0}));
  CHECK(selfdual_to_partition({2, 1, -1, -2}) == Seq({2, 1}));

  for (int n = 1; n <= 3; ++n) {
    for (const auto& theta : all_partitions(n, 3)) {
      const Seq sig = partition_to_selfdual(theta);
      CHECK(sig == dual_signature(sig));
      CHECK(selfdual_to_partition(sig) == theta);
    }
  }
  CHECK_THROWS_AS(selfdual_to_partition({1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(selfdual_to_partition({1, 0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(partition_to_selfdual({0, 1}), std::invalid_argument);
}

TEST_CASE("orbit representatives") {
  const auto base = orbit_representative(make_orbit_label({0, 0, 0}, {0, 0, 0}));
  CHECK(base.vector_exponents == Seq({0, 0, 0}));
  CHECK(base.lattice_exponents == Seq({0, 0, 0, 0, 0, 0}));

  const auto r1 = orbit_representative(make_orbit_label({1}, {0}));
  CHECK(r1.vector_exponents == Seq({-1}));
  CHECK(r1.lattice_exponents == Seq({-1, 1}));

  const auto r2 = orbit_representative(make_orbit_label({1, 0}, {2, 1}));
  CHECK(r2.lattice_exponents == Seq({-3, -1, 1, 3}));

  // Lattice exponents are antisymmetric under reversal-with-negation.
  for (const auto& theta : all_partitions(2, 3))
    for (const auto& zeta : all_partitions(2, 3)) {
      const auto rep = orbit_representative(make_orbit_label(theta, zeta));
      const auto& l = rep.lattice_exponents;
      for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[i] == -l[l.size() - 1 - i]);
    }
}

TEST_CASE("levi types") {
  const LeviType sp6 = levi_type(make_orbit_label({0, 0, 0}, {0, 0, 0}));
  CHECK(sp6.m0 == 3);
  CHECK(sp6.gl_blocks.empty());
  CHECK(sp6.to_string() == "Sp(6)");

  const LeviType mixed = levi_type(make_orbit_label({2, 1, 1, 0}, {0, 0, 0, 0}));
  CHECK(mixed.m0 == 1);
  CHECK(mixed.gl_blocks == std::map<long long, long long>({{1, 2}, {2, 1}}));
  CHECK(mixed.to_string() == "Sp(2)xGL(2)xGL(1)");

  const LeviType gl1 = levi_type(make_orbit_label({1}, {0}));
  CHECK(gl1.m0 == 0);
  CHECK(gl1.to_string() == "GL(1)");

  for (const auto& theta : all_partitions(3, 2))
    for (const auto& zeta : all_partitions(3, 2)) {
      const LeviType levi = levi_type(make_orbit_label(theta, zeta));
      long long total = levi.m0;
      for (const auto& [value, mult] : levi.gl_blocks) {
        CHECK(value > 0);
        total += mult;
      }
      CHECK(total == 3);
    }
}

TEST_CASE("hasse diagram at rank 1, bound 1 is a chain") {
  const HasseDiagram h = closure_hasse(1, 1);
  REQUIRE(h.labels.size() == 4);
  // Grid order: theta-major.
  CHECK(h.labels[0] == OrbitLabel{{0}, {0}});
  CHECK(h.labels[1] == OrbitLabel{{0}, {1}});
  CHECK(h.labels[2] == OrbitLabel{{1}, {0}});
  CHECK(h.labels[3] == OrbitLabel{{1}, {1}});

  // e1 - d1 is a root, so (0;1) > (1;0) and the poset is the chain
  // (1;1) > (0;1) > (1;0) > (0;0); in particular (1,0) -> (0,0) is a
  // covering edge but (0,1) -> (0,0) is not.
  const std::vector<std::pair<int, int>> expect = {{1, 2}, {2, 0}, {3, 1}};
  std::vector<std::pair<int, int>> got = h.edges;
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
}

TEST_CASE("hasse transitive closure equals dominance and is acyclic") {
  const HasseDiagram h = closure_hasse(1, 2);
  const std::size_t m = h.labels.size();
  REQUIRE(m == 9);

  // Closure of the covering edges.
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) reach[i][i] = true;
  for (const auto& [from, to] : h.edges)
    reach[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] = true;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  PartitionCounter engine(odd_positive_roots(2));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const bool dom = dominance_ge(label_to_dominant_pair(h.labels[i]),
                                    label_to_dominant_pair(h.labels[j]), engine);
      CHECK(reach[i][j] == dom);
      CHECK(h.ge[i][j] == dom);
      // Antisymmetry makes the diagram acyclic.
      if (i != j && reach[i][j]) CHECK_FALSE(reach[j][i]);
    }

  // The zero label is the unique minimum.
  CHECK(h.labels[0] == OrbitLabel{{0, 0}, {0, 0}});
  for (std::size_t i = 0; i < m; ++i) {
    CHECK(h.ge[i][0]);
    if (i != 0) CHECK_FALSE(h.ge[0][i]);
  }
}

TEST_CASE("hasse bounds and limits") {
  const HasseDiagram h0 = closure_hasse(0, 2);
  CHECK(h0.labels.size() == 1);
  CHECK(h0.edges.empty());
  CHECK_THROWS_AS(closure_hasse(50, 3, 16), limit_error);
  CHECK_THROWS_AS(closure_hasse(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_orbit_label({1, 2}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_orbit_label({-1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_orbit_label({1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("dot output shape") {
  const std::string dot = hasse_to_dot(closure_hasse(1, 1));
  CHECK(dot.rfind("digraph closure {", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.back() == '\n');
}

}  // TEST_SUITE
