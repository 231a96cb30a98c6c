#pragma once

#include <array>
#include <string>
#include <vector>

namespace osk {

enum class ExceptionalName { F4, G3 };

ExceptionalName exceptional_from_string(const std::string& s);
std::string exceptional_to_string(ExceptionalName name);

// Weight in the (delta; eps1..eps3) coordinate space, doubled so that the
// half-integral spin weights of F(4) are exact.
struct ExceptionalWeight {
  long long delta2 = 0;
  std::array<long long, 3> eps2{0, 0, 0};

  bool operator==(const ExceptionalWeight&) const = default;
  std::string to_string() const;
};

// Root data for one exceptional case. The even part is Spin(7) x SL(2) for
// F(4) and G2 x SL(2) for G(3); the Borel simple roots and fiber weights
// are the odd-side data used by the Hesselink bundle dimension count.
struct ExceptionalCase {
  ExceptionalName name;
  std::vector<ExceptionalWeight> borel_simple_roots;
  std::vector<ExceptionalWeight> odd_fiber_weights;
  std::vector<std::vector<int>> even_cartan;  // Spin(7): B3, resp. G2
  std::vector<std::vector<int>> levi_cartan;  // A1: the parabolic drops one simple root
};

ExceptionalCase case_data(ExceptionalName name);

// All odd positive roots with respect to the case's Borel, reconstructed
// from the odd-part weight structure: for F(4) the sixteen weights
// (+-delta +-eps1 +-eps2 +-eps3)/2 of spin(7) tensor the 2-dimensional
// sl(2) module; for G(3) the fourteen weights w +- delta with w running
// over the 7-dimensional G2 module {0, +-eps1, +-eps2, -+(eps1+eps2)}.
// Positivity is decided by exact bounded search for a nonnegative-integer
// combination of the Borel simple roots.
std::vector<ExceptionalWeight> odd_positive_weights(ExceptionalName name);

// Total-space dimension of the Hesselink resolution: dim(even flag base) +
// dim(P^1) + fiber rank, every summand derived from root counts. 15 for
// F(4), 13 for G(3).
long long hesselink_dim(const ExceptionalCase& data);
long long hesselink_dim(ExceptionalName name);

}  // namespace osk
