#pragma once

#include <vector>

#include "osk/weights.hpp"

namespace osk {

// Positive roots of sp(2n) on the delta side: d_i - d_j, d_i + d_j (i < j)
// and 2d_i.
std::vector<WeightVector> sp_positive_roots(int n);

// Positive roots of so(2n+1) on the eps side: e_i - e_j, e_i + e_j (i < j)
// and e_i.
std::vector<WeightVector> so_positive_roots(int n);

// rho = half-sum of sp(2n) positive roots = (n, n-1, ..., 1) on the delta
// side. Computed from the list, not the closed form.
WeightVector rho(int n);

// rho0 = half-sum of so(2n+1) positive roots = (n-1/2, ..., 1/2) on the eps
// side (half-integral).
WeightVector rho0(int n);

// Number of positive roots of the root system with the given Cartan matrix
// (rows/columns indexed by simple roots, C[i][j] = <alpha_j, alpha_i^vee>).
// Generates the full system by closing the simple roots under simple
// reflections in simple-root coordinates.
int positive_root_count(const std::vector<std::vector<int>>& cartan);

// Standard Cartan matrices used by the exceptional checks.
std::vector<std::vector<int>> cartan_A1();
std::vector<std::vector<int>> cartan_B(int n);
std::vector<std::vector<int>> cartan_G2();

}  // namespace osk
