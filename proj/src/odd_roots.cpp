#include "osk/odd_roots.hpp"

#include <stdexcept>

namespace osk {

namespace {

WeightVector make_root(int n, int delta_idx, long long delta_c, int eps_idx, long long eps_c) {
  std::vector<long long> d(n, 0), e(n, 0);
  if (delta_idx >= 0) d[delta_idx] = delta_c;
  if (eps_idx >= 0) e[eps_idx] = eps_c;
  return WeightVector::integral(std::move(d), std::move(e));
}

}  // namespace

OddRootSystem::OddRootSystem(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) roots_.push_back(make_root(n, j, 1, i, 1));  // e_i + d_j
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) roots_.push_back(make_root(n, j, -1, i, 1));  // e_i - d_j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots_.push_back(make_root(n, i, 1, j, -1));  // d_i - e_j
  for (int i = 0; i < n; ++i) roots_.push_back(make_root(n, i, 1, -1, 0));  // d_i

  if (roots_.size() != expected_count(n))
    throw std::logic_error("odd positive root count mismatch");

  h_delta_.resize(n);
  h_eps_.resize(n);
  for (int i = 0; i < n; ++i) {
    h_delta_[i] = 2 * (n - (i + 1)) + 1;
    h_eps_[i] = 2 * (n - (i + 1)) + 2;
  }

  for (const auto& r : roots_) {
    const long long h2 = height_doubled(r);
    if (h2 < 2) throw std::logic_error("height functional is not >= 1 on a root");
    root_h2_.push_back(h2);
  }
}

long long OddRootSystem::height_doubled(const WeightVector& w) const {
  if (w.rank() != n_) throw std::invalid_argument("rank mismatch");
  long long h2 = 0;
  for (int i = 0; i < n_; ++i) {
    h2 += h_delta_[i] * w.delta2()[i];
    h2 += h_eps_[i] * w.eps2()[i];
  }
  return h2;
}

OddRootSystem odd_positive_roots(int n) { return OddRootSystem(n); }

}  // namespace osk
