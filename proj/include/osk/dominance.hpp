#pragma once

#include "osk/partition_fn.hpp"
#include "osk/weights.hpp"

namespace osk {

// Dominance order on dominant pairs: (lam1, lam0) >= (mu1, mu0) iff the
// difference is a nonnegative-integer combination of the odd positive
// roots. Shares the partition-function search engine (early-exit variant).
bool dominance_ge(const DominantWeightPair& a, const DominantWeightPair& b,
                  PartitionCounter& engine);

// One-shot convenience overload; builds a fresh engine for the rank.
bool dominance_ge(const DominantWeightPair& a, const DominantWeightPair& b);

}  // namespace osk
