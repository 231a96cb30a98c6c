#include "osk/kostka.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include "osk/dominance.hpp"
#include "osk/errors.hpp"
#include "osk/root_systems.hpp"
#include "osk/signed_perm.hpp"

namespace osk {

namespace {

struct WeylSumContext {
  int n;
  std::vector<long long> x2;      // doubled lam1 + rho, delta side
  std::vector<long long> u2;      // doubled lam0 + rho0, eps side
  std::vector<long long> rho2;    // doubled rho
  std::vector<long long> rho02;   // doubled rho0
  std::vector<long long> mu1_2;   // doubled mu1
  std::vector<long long> mu0_2;   // doubled mu0
};

WeylSumContext make_context(const DominantWeightPair& lam, const DominantWeightPair& mu) {
  WeylSumContext ctx;
  ctx.n = lam.rank();
  ctx.rho2 = rho(ctx.n).delta2();
  ctx.rho02 = rho0(ctx.n).eps2();
  ctx.x2.resize(ctx.n);
  ctx.u2.resize(ctx.n);
  ctx.mu1_2.resize(ctx.n);
  ctx.mu0_2.resize(ctx.n);
  for (int i = 0; i < ctx.n; ++i) {
    ctx.x2[i] = 2 * lam.lam1()[i] + ctx.rho2[i];
    ctx.u2[i] = 2 * lam.lam0()[i] + ctx.rho02[i];
    ctx.mu1_2[i] = 2 * mu.lam1()[i];
    ctx.mu0_2[i] = 2 * mu.lam0()[i];
  }
  return ctx;
}

// The argument of the L factor for the pair (w, w0), or nothing when its
// height is negative (the factor vanishes). Throws on a non-integral
// argument; the half-integral rho0 parts must cancel.
std::optional<WeightVector> term_argument(const WeylSumContext& ctx, const OddRootSystem& roots,
                                          const SignedPermutation& w,
                                          const SignedPermutation& w0) {
  const int n = ctx.n;
  std::vector<long long> arg_delta2 = act(w, ctx.x2);
  std::vector<long long> arg_eps2 = act(w0, ctx.u2);
  for (int i = 0; i < n; ++i) {
    arg_delta2[i] -= ctx.rho2[i] + ctx.mu1_2[i];
    arg_eps2[i] -= ctx.rho02[i] + ctx.mu0_2[i];
    if (arg_delta2[i] % 2 != 0 || arg_eps2[i] % 2 != 0)
      throw std::logic_error("non-integral Weyl-sum argument (convention bug)");
  }
  WeightVector arg = WeightVector::from_doubled(std::move(arg_delta2), std::move(arg_eps2));
  if (roots.height_doubled(arg) < 0) return std::nullopt;
  return arg;
}

// Accumulates the signed terms for pair indices [lo, hi) into `acc` using
// the L values supplied by `lookup`. Pair index p encodes (w, w0) as
// p = w_index * |W0| + w0_index.
template <typename Lookup>
void accumulate_range(const WeylSumContext& ctx, const OddRootSystem& roots, std::uint64_t lo,
                      std::uint64_t hi, std::uint64_t order, Lookup&& lookup, QPolynomial& acc) {
  const int n = ctx.n;
  std::uint64_t prev_w = order;  // sentinel: forces a recompute on entry
  SignedPermutation w;
  int sign_w = 1;
  for (std::uint64_t p = lo; p < hi; ++p) {
    const std::uint64_t wi = p / order;
    const std::uint64_t w0i = p % order;
    if (wi != prev_w) {
      w = signed_perm_at(n, wi);
      sign_w = sign(w);
      prev_w = wi;
    }
    const SignedPermutation w0 = signed_perm_at(n, w0i);
    const auto arg = term_argument(ctx, roots, w, w0);
    if (!arg) continue;
    const QPolynomial& term = lookup(*arg);
    if (term.is_zero()) continue;
    acc.add(term, sign_w * sign(w0));
  }
}

// Largest term height over all Weyl pairs, or -1 when every term dies.
// Also reports whether all argument coordinates stay in packing range.
std::pair<long long, bool> survey_terms(const WeylSumContext& ctx, const OddRootSystem& roots,
                                        std::uint64_t order) {
  long long h2max = -1;
  bool packable = true;
  constexpr long long kMax = std::numeric_limits<std::int32_t>::max();
  for (std::uint64_t wi = 0; wi < order; ++wi) {
    const SignedPermutation w = signed_perm_at(ctx.n, wi);
    for (std::uint64_t w0i = 0; w0i < order; ++w0i) {
      const SignedPermutation w0 = signed_perm_at(ctx.n, w0i);
      const auto arg = term_argument(ctx, roots, w, w0);
      if (!arg) continue;
      h2max = std::max(h2max, roots.height_doubled(*arg));
      for (auto c : arg->delta2()) packable = packable && c <= kMax && c >= -kMax;
      for (auto c : arg->eps2()) packable = packable && c <= kMax && c >= -kMax;
    }
  }
  return {h2max, packable};
}

template <typename MakeLookup>
QPolynomial run_weyl_sum(const WeylSumContext& ctx, const OddRootSystem& roots,
                         std::uint64_t order, std::uint64_t total, int jobs,
                         MakeLookup&& make_lookup) {
  if (jobs == 1 || total < 64) {
    auto lookup = make_lookup();
    QPolynomial acc;
    accumulate_range(ctx, roots, 0, total, order, lookup, acc);
    return acc;
  }
  // Contiguous chunks, one local accumulator per thread, combined in chunk
  // order. Addition of exact polynomials is associative and commutative, so
  // the result is identical to the sequential sum.
  const std::uint64_t nchunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
  const std::uint64_t chunk = (total + nchunks - 1) / nchunks;
  std::vector<QPolynomial> partial(nchunks);
  std::vector<std::thread> workers;
  workers.reserve(nchunks);
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    workers.emplace_back([&, c]() {
      const std::uint64_t lo = c * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      auto lookup = make_lookup();
      accumulate_range(ctx, roots, lo, hi, order, lookup, partial[c]);
    });
  }
  for (auto& t : workers) t.join();

  QPolynomial acc;
  for (const auto& part : partial) acc.add(part);
  return acc;
}

}  // namespace

QPolynomial kostka_poly(const DominantWeightPair& lam, const DominantWeightPair& mu,
                        const KostkaOptions& opts) {
  if (lam.rank() != mu.rank()) throw std::invalid_argument("rank mismatch");
  const int n = lam.rank();
  if (n > opts.max_rank) throw limit_error("rank over configured enumeration limit");

  const WeylSumContext ctx = make_context(lam, mu);
  const OddRootSystem roots = odd_positive_roots(n);
  const std::uint64_t order = hyperoctahedral_order(n);
  if (order > 0xffffffffull) throw limit_error("Weyl pair count overflows 64 bits");
  const std::uint64_t total = order * order;
  const int jobs = std::max(1, opts.jobs);

  const bool want_table = opts.route == KostkaRoute::kTable ||
                          (opts.route == KostkaRoute::kAuto && n >= 4);
  if (want_table && n <= 8) {
    const auto [h2max, packable] = survey_terms(ctx, roots, order);
    if (h2max < 0) return QPolynomial();
    if (packable) {
      const PartitionTable table(roots, h2max, opts.table_state_cap);
      return run_weyl_sum(ctx, roots, order, total, jobs, [&]() {
        return [&table](const WeightVector& arg) -> const QPolynomial& {
          return table.l_poly(arg);
        };
      });
    }
  }

  // Fallback route: per-thread memoized engines.
  return run_weyl_sum(ctx, roots, order, total, jobs, [&]() {
    return [engine = PartitionCounter(roots, opts.memo_cap),
            held = QPolynomial()](const WeightVector& arg) mutable -> const QPolynomial& {
      held = engine.l_poly(arg);
      return held;
    };
  });
}

LaurentPolynomial stalk_poincare(const DominantWeightPair& lam, const DominantWeightPair& mu,
                                 long long dim_mu, const KostkaOptions& opts) {
  if (dim_mu < 0) throw std::invalid_argument("orbit dimension must be nonnegative");
  const QPolynomial k = kostka_poly(lam, mu, opts);
  if (k.is_zero()) return LaurentPolynomial();
  // K(q^{-1}) * q^{-dim}: reverse the coefficients below exponent zero.
  std::vector<BigInt> rev(k.coeffs().rbegin(), k.coeffs().rend());
  const int offset = -k.degree() - static_cast<int>(dim_mu);
  return LaurentPolynomial(offset, QPolynomial(std::move(rev)));
}

bool support_check(const DominantWeightPair& lam, const DominantWeightPair& mu) {
  return dominance_ge(lam, mu);
}

}  // namespace osk
