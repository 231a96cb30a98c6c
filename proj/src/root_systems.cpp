#include "osk/root_systems.hpp"

#include <set>
#include <stdexcept>

namespace osk {

namespace {

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
}

WeightVector delta_unit(int n, int i, long long c) {
  std::vector<long long> d(n, 0), e(n, 0);
  d[i] = c;
  return WeightVector::integral(std::move(d), std::move(e));
}

WeightVector eps_unit(int n, int i, long long c) {
  std::vector<long long> d(n, 0), e(n, 0);
  e[i] = c;
  return WeightVector::integral(std::move(d), std::move(e));
}

WeightVector half_sum(int n, const std::vector<WeightVector>& roots) {
  std::vector<long long> d2(n, 0), e2(n, 0);
  for (const auto& r : roots) {
    for (int i = 0; i < n; ++i) {
      d2[i] += r.delta2()[i] / 2;
      e2[i] += r.eps2()[i] / 2;
    }
  }
  return WeightVector::from_doubled(std::move(d2), std::move(e2));
}

}  // namespace

std::vector<WeightVector> sp_positive_roots(int n) {
  check_rank(n);
  std::vector<WeightVector> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(delta_unit(n, i, 1) - delta_unit(n, j, 1));
      roots.push_back(delta_unit(n, i, 1) + delta_unit(n, j, 1));
    }
  for (int i = 0; i < n; ++i) roots.push_back(delta_unit(n, i, 2));
  return roots;
}

std::vector<WeightVector> so_positive_roots(int n) {
  check_rank(n);
  std::vector<WeightVector> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(eps_unit(n, i, 1) - eps_unit(n, j, 1));
      roots.push_back(eps_unit(n, i, 1) + eps_unit(n, j, 1));
    }
  for (int i = 0; i < n; ++i) roots.push_back(eps_unit(n, i, 1));
  return roots;
}

WeightVector rho(int n) { return half_sum(n, sp_positive_roots(n)); }

WeightVector rho0(int n) { return half_sum(n, so_positive_roots(n)); }

int positive_root_count(const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  if (r < 1) throw std::invalid_argument("empty Cartan matrix");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != r)
      throw std::invalid_argument("Cartan matrix must be square");

  using Root = std::vector<int>;  // coordinates in the simple-root basis
  std::set<Root> roots;
  std::vector<Root> frontier;
  for (int i = 0; i < r; ++i) {
    Root a(r, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, with
  // <beta, alpha_i^vee> = sum_j cartan[i][j] * beta_j.
  constexpr std::size_t kFiniteCap = 100000;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += cartan[i][j] * b[j];
        Root s = b;
        s[i] -= pairing;
        if (roots.insert(s).second) next.push_back(s);
      }
    }
    if (roots.size() > kFiniteCap)
      throw std::invalid_argument("Cartan matrix did not generate a finite root system");
    frontier = std::move(next);
  }

  int positive = 0;
  for (const auto& b : roots) {
    bool nonneg = true;
    for (int x : b)
      if (x < 0) nonneg = false;
    if (nonneg) ++positive;
  }
  // Finite root systems split evenly into positive and negative halves.
  if (2 * positive != static_cast<int>(roots.size()))
    throw std::invalid_argument("Cartan matrix did not generate a finite root system");
  return positive;
}

std::vector<std::vector<int>> cartan_A1() { return {{2}}; }

std::vector<std::vector<int>> cartan_B(int n) {
  check_rank(n);
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) {
    c[i][i + 1] = -1;
    c[i + 1][i] = -1;
  }
  // Last simple root short: the (n-1, n-2) entry doubles.
  if (n >= 2) c[n - 1][n - 2] = -2;
  return c;
}

std::vector<std::vector<int>> cartan_G2() { return {{2, -1}, {-3, 2}}; }

}  // namespace osk
