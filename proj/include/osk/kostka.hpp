#pragma once

#include <cstddef>

#include "osk/partition_fn.hpp"
#include "osk/qpoly.hpp"
#include "osk/weights.hpp"

namespace osk {

// How the L factors of the Weyl sum are evaluated. kTable builds one
// shared height-bounded table and serves every term as a read-only lookup
// (wins when the pair count is large); kEngine gives each worker a
// memoized per-weight engine (wins at small ranks, where few terms
// survive the height cut). kAuto picks by rank. Both routes produce
// identical polynomials.
enum class KostkaRoute { kAuto, kTable, kEngine };

struct KostkaOptions {
  int jobs = 1;            // parallel width of the Weyl-pair reduction
  int max_rank = 8;        // enumeration guard for the double Weyl sum
  std::size_t memo_cap = PartitionCounter::kDefaultMemoCap;
  KostkaRoute route = KostkaRoute::kAuto;
  std::size_t table_state_cap = std::size_t{1} << 22;
};

// Super Kostka polynomial: the alternating sum over all pairs (w, w0) of
// hyperoctahedral elements, acting on the delta and eps blocks
// respectively, of
//
//     sign(w) * sign(w0) * L(w(lam1+rho)-rho-mu1, w0(lam0+rho0)-rho0-mu0).
//
// Every L-argument is integral (the half-integral rho0 contributions
// cancel); a non-integral argument indicates a convention bug and throws.
// Pairs whose argument has negative height are skipped: they contribute 0.
QPolynomial kostka_poly(const DominantWeightPair& lam, const DominantWeightPair& mu,
                        const KostkaOptions& opts = {});

// Stalk Poincare series: substitutes q -> q^{-1} in kostka_poly and
// multiplies by q^{-dim_mu}. The orbit dimension dim_mu is caller-supplied;
// there is no formula for it here.
LaurentPolynomial stalk_poincare(const DominantWeightPair& lam, const DominantWeightPair& mu,
                                 long long dim_mu, const KostkaOptions& opts = {});

// True iff the mu-orbit lies in the closure of the lam-orbit, i.e.
// dominance_ge(lam, mu).
bool support_check(const DominantWeightPair& lam, const DominantWeightPair& mu);

}  // namespace osk
