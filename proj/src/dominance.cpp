#include "osk/dominance.hpp"

#include <stdexcept>

namespace osk {

bool dominance_ge(const DominantWeightPair& a, const DominantWeightPair& b,
                  PartitionCounter& engine) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  if (a.rank() != engine.roots().rank()) throw std::invalid_argument("engine rank mismatch");
  return engine.in_positive_span(a.combined() - b.combined());
}

bool dominance_ge(const DominantWeightPair& a, const DominantWeightPair& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  PartitionCounter engine(odd_positive_roots(a.rank()));
  return dominance_ge(a, b, engine);
}

}  // namespace osk
