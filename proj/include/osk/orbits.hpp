#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "osk/partition_fn.hpp"

namespace osk {

// Pair of weakly decreasing integer 2n-vectors indexing mirabolic lattice
// orbits.
struct Bisignature {
  std::vector<long long> lam;
  std::vector<long long> nu;

  bool operator==(const Bisignature&) const = default;
};

Bisignature make_bisignature(std::vector<long long> lam, std::vector<long long> nu);

// Componentwise signature dual (lam*, nu*); an involution.
Bisignature dual_bisignature(const Bisignature& b);

// Pair of length-n partitions indexing relevant orbits.
struct OrbitLabel {
  std::vector<long long> theta;
  std::vector<long long> zeta;

  int rank() const { return static_cast<int>(theta.size()); }
  bool operator==(const OrbitLabel&) const = default;
  std::string to_string() const;  // "θ=[1,0] ζ=[2,1]"
};

OrbitLabel make_orbit_label(std::vector<long long> theta, std::vector<long long> zeta);

// The self-dual bisignature attached to an orbit label; fixed by
// dual_bisignature.
Bisignature label_to_bisignature(const OrbitLabel& label);

// Exponent data of the distinguished point of an orbit: the vector
// v = sum_i t^{-theta_i} e_i and the lattice spanned by
// t^{-theta_i-zeta_i} e_i (i <= n) and t^{theta_{2n+1-i}+zeta_{2n+1-i}} e_i
// (i > n). The lattice exponents are antisymmetric under
// reversal-with-negation (the lattice is self-dual).
struct OrbitRepresentative {
  std::vector<long long> vector_exponents;   // length n
  std::vector<long long> lattice_exponents;  // length 2n
};

// Reductive part of the lattice stabilizer: Sp(2 m0) x prod GL(m_i) where
// m_i is the multiplicity of i in the multiset {theta_j + zeta_j}.
struct LeviType {
  long long m0 = 0;
  std::map<long long, long long> gl_blocks;  // value -> multiplicity, values > 0

  bool operator==(const LeviType&) const = default;
  std::string to_string() const;  // "Sp(2)xGL(2)xGL(1)"
};

// Reversal with negation; an involution on weakly decreasing sequences.
std::vector<long long> dual_signature(const std::vector<long long>& s);

// theta -> (theta_1 >= ... >= theta_n >= -theta_n >= ... >= -theta_1).
std::vector<long long> partition_to_selfdual(const std::vector<long long>& theta);

// Inverse of partition_to_selfdual; rejects non-self-dual input.
std::vector<long long> selfdual_to_partition(const std::vector<long long>& sig);

OrbitRepresentative orbit_representative(const OrbitLabel& label);

LeviType levi_type(const OrbitLabel& label);

// The orbit label read as a dominant pair: theta as the Sp weight, zeta as
// the SO weight.
DominantWeightPair label_to_dominant_pair(const OrbitLabel& label);

// Closure order on all labels with entries <= bound at the given rank,
// transitively reduced to covering edges (from larger to smaller).
struct HasseDiagram {
  int n = 0;
  long long bound = 0;
  std::vector<OrbitLabel> labels;                 // deterministic grid order
  std::vector<std::pair<int, int>> edges;         // (from, to) label indices
  std::vector<std::vector<bool>> ge;              // full dominance relation
};

HasseDiagram closure_hasse(long long bound, int n, std::size_t label_limit = 4096);

std::string hasse_to_dot(const HasseDiagram& h);

}  // namespace osk
