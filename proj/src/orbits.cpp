#include "osk/orbits.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "osk/dominance.hpp"
#include "osk/errors.hpp"

namespace osk {

namespace {

void check_weakly_decreasing(const std::vector<long long>& s, const char* what) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] < s[i + 1]) throw std::invalid_argument(std::string(what) + " is not weakly decreasing");
}

void check_partition(const std::vector<long long>& p, const char* what) {
  if (p.empty()) throw std::invalid_argument(std::string(what) + " must have length >= 1");
  check_weakly_decreasing(p, what);
  if (p.back() < 0) throw std::invalid_argument(std::string(what) + " has a negative entry");
}

std::string seq_to_string(const std::vector<long long>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

}  // namespace

std::string OrbitLabel::to_string() const {
  return "θ=" + seq_to_string(theta) + " ζ=" + seq_to_string(zeta);
}

OrbitLabel make_orbit_label(std::vector<long long> theta, std::vector<long long> zeta) {
  check_partition(theta, "theta");
  check_partition(zeta, "zeta");
  if (theta.size() != zeta.size())
    throw std::invalid_argument("theta and zeta must have the same length");
  return OrbitLabel{std::move(theta), std::move(zeta)};
}

Bisignature make_bisignature(std::vector<long long> lam, std::vector<long long> nu) {
  check_weakly_decreasing(lam, "lam");
  check_weakly_decreasing(nu, "nu");
  if (lam.size() != nu.size() || lam.size() % 2 != 0 || lam.empty())
    throw std::invalid_argument("bisignature components must share an even positive length");
  return Bisignature{std::move(lam), std::move(nu)};
}

Bisignature dual_bisignature(const Bisignature& b) {
  return Bisignature{dual_signature(b.lam), dual_signature(b.nu)};
}

Bisignature label_to_bisignature(const OrbitLabel& label) {
  return make_bisignature(partition_to_selfdual(label.theta), partition_to_selfdual(label.zeta));
}

std::vector<long long> dual_signature(const std::vector<long long>& s) {
  check_weakly_decreasing(s, "signature");
  std::vector<long long> out(s.rbegin(), s.rend());
  for (auto& x : out) x = -x;
  return out;
}

std::vector<long long> partition_to_selfdual(const std::vector<long long>& theta) {
  check_partition(theta, "theta");
  std::vector<long long> out(theta);
  for (auto it = theta.rbegin(); it != theta.rend(); ++it) out.push_back(-*it);
  return out;
}

std::vector<long long> selfdual_to_partition(const std::vector<long long>& sig) {
  check_weakly_decreasing(sig, "signature");
  if (sig.size() % 2 != 0 || sig.empty())
    throw std::invalid_argument("self-dual signature must have even positive length");
  if (sig != dual_signature(sig))
    throw std::invalid_argument("signature is not self-dual");
  return std::vector<long long>(sig.begin(), sig.begin() + static_cast<std::ptrdiff_t>(sig.size() / 2));
}

OrbitRepresentative orbit_representative(const OrbitLabel& label) {
  const std::size_t n = label.theta.size();
  OrbitRepresentative rep;
  rep.vector_exponents.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rep.vector_exponents.push_back(-label.theta[i]);
  rep.lattice_exponents.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    rep.lattice_exponents.push_back(-label.theta[i] - label.zeta[i]);
  for (std::size_t i = n; i-- > 0;)
    rep.lattice_exponents.push_back(label.theta[i] + label.zeta[i]);
  return rep;
}

LeviType levi_type(const OrbitLabel& label) {
  LeviType levi;
  for (std::size_t i = 0; i < label.theta.size(); ++i) {
    const long long sum = label.theta[i] + label.zeta[i];
    if (sum == 0)
      ++levi.m0;
    else
      ++levi.gl_blocks[sum];
  }
  return levi;
}

std::string LeviType::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (m0 > 0) {
    out << "Sp(" << 2 * m0 << ")";
    first = false;
  }
  for (const auto& [value, mult] : gl_blocks) {
    (void)value;
    out << (first ? "" : "x") << "GL(" << mult << ")";
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

DominantWeightPair label_to_dominant_pair(const OrbitLabel& label) {
  return DominantWeightPair(label.theta, label.zeta);
}

namespace {

void enumerate_partitions(long long bound, int length, std::vector<long long>& cur,
                          std::vector<std::vector<long long>>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  const long long cap = cur.empty() ? bound : cur.back();
  for (long long v = 0; v <= cap; ++v) {
    cur.push_back(v);
    enumerate_partitions(bound, length, cur, out);
    cur.pop_back();
  }
}

}  // namespace

HasseDiagram closure_hasse(long long bound, int n, std::size_t label_limit) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");

  std::vector<std::vector<long long>> partitions;
  std::vector<long long> cur;
  enumerate_partitions(bound, n, cur, partitions);
  // Grid order: theta-major, zeta minor, each in ascending lexicographic
  // partition order.
  std::sort(partitions.begin(), partitions.end());

  HasseDiagram h;
  h.n = n;
  h.bound = bound;
  if (partitions.size() * partitions.size() > label_limit)
    throw limit_error("orbit label grid over enumeration limit");
  for (const auto& theta : partitions)
    for (const auto& zeta : partitions) h.labels.push_back(OrbitLabel{theta, zeta});

  const std::size_t m = h.labels.size();
  PartitionCounter engine(odd_positive_roots(n));
  std::vector<DominantWeightPair> pairs;
  pairs.reserve(m);
  for (const auto& label : h.labels) pairs.push_back(label_to_dominant_pair(label));

  h.ge.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h.ge[i][j] = dominance_ge(pairs[i], pairs[j], engine);

  // Covering edges: i > j strictly with no k strictly between.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !h.ge[i][j] || h.ge[j][i]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < m && covered; ++k) {
        if (k == i || k == j) continue;
        if (h.ge[i][k] && !h.ge[k][i] && h.ge[k][j] && !h.ge[j][k]) covered = false;
      }
      if (covered) h.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

std::string hasse_to_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph closure {\n";
  for (const auto& label : h.labels) out << "  \"" << label.to_string() << "\";\n";
  for (const auto& [from, to] : h.edges)
    out << "  \"" << h.labels[static_cast<std::size_t>(from)].to_string() << "\" -> \""
        << h.labels[static_cast<std::size_t>(to)].to_string() << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace osk
