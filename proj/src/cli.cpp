#include "osk/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "osk/dominance.hpp"
#include "osk/errors.hpp"
#include "osk/exceptional.hpp"
#include "osk/json_io.hpp"
#include "osk/kostka.hpp"
#include "osk/odd_roots.hpp"
#include "osk/orbits.hpp"
#include "osk/partition_fn.hpp"
#include "osk/qpoly.hpp"
#include "osk/root_systems.hpp"
#include "osk/signed_perm.hpp"
#include "osk/weights.hpp"

namespace osk {

namespace {

using nlohmann::json;

std::vector<long long> parse_int_list(const std::string& s, const std::string& flag) {
  std::vector<long long> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer list for " + flag + ": '" + s + "'");
    }
    if (pos != token.size())
      throw std::invalid_argument("malformed integer list for " + flag + ": '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list for " + flag);
  return out;
}

std::vector<long long> parse_coords(const std::string& s, int n, const std::string& flag) {
  auto v = parse_int_list(s, flag);
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument(flag + " must have exactly " + std::to_string(n) + " entries");
  return v;
}

struct CommonFlags {
  int n = 1;
  std::string format = "json";
  int jobs = 1;
  int max_rank = 4;
  long long oracle_bound = 12;
};

// ---- check suites ---------------------------------------------------------

struct CheckReport {
  std::ostream& out;
  int failures = 0;

  void item(const std::string& name, bool pass, const std::string& detail = "") {
    out << (pass ? "ok   " : "FAIL ") << name;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
    if (!pass) ++failures;
  }
};

void check_roots(CheckReport& rep) {
  bool counts = true;
  for (int n = 1; n <= 6; ++n)
    counts = counts && odd_positive_roots(n).size() == OddRootSystem::expected_count(n);
  rep.item("roots.count 2n^2+n for n=1..6", counts);

  const OddRootSystem r1 = odd_positive_roots(1);
  const bool n1 = r1.roots()[0] == WeightVector::integral({1}, {1}) &&
                  r1.roots()[1] == WeightVector::integral({-1}, {1}) &&
                  r1.roots()[2] == WeightVector::integral({1}, {0});
  rep.item("roots.n1 list [e1+d1, e1-d1, d1]", n1);

  bool heights = true;
  for (int n = 1; n <= 6; ++n) {
    const OddRootSystem rs = odd_positive_roots(n);
    for (std::size_t i = 0; i < rs.size(); ++i)
      heights = heights && rs.root_height_doubled(i) >= 2;
  }
  rep.item("roots.height >= 1 on every root", heights);

  rep.item("roots.rho(2) = 2d1+d2", rho(2) == WeightVector::integral({2, 1}, {0, 0}));
  rep.item("roots.rho0(2) = 3/2e1+1/2e2",
           rho0(2) == WeightVector::from_doubled({0, 0}, {3, 1}));
}

void check_weyl(CheckReport& rep) {
  bool sizes = true;
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t count = 0;
    for_each_signed_perm(n, [&](const SignedPermutation&) { ++count; });
    sizes = sizes && count == hyperoctahedral_order(n);
  }
  rep.item("weyl.order 2^n n! for n=1..4", sizes);

  bool hom = true;
  const auto elems = enumerate_signed_perms(3);
  for (const auto& a : elems)
    for (const auto& b : elems) hom = hom && sign(compose(a, b)) == sign(a) * sign(b);
  rep.item("weyl.sign homomorphism at n=3", hom);

  bool balanced = true;
  for (int n = 1; n <= 4; ++n) {
    long long total = 0;
    for_each_signed_perm(n, [&](const SignedPermutation& w) { total += sign(w); });
    balanced = balanced && total == 0;
  }
  rep.item("weyl.sign sum zero for n=1..4", balanced);
}

void check_partition(CheckReport& rep) {
  const OddRootSystem roots = odd_positive_roots(1);
  PartitionCounter engine(roots);
  rep.item("partition.L(0) = 1", engine.l_poly(WeightVector::zero(1)) == QPolynomial::one());
  rep.item("partition.L(d1) = q",
           engine.l_poly(WeightVector::integral({1}, {0})) == QPolynomial::monomial(1));
  QPolynomial expect_e1d1;
  expect_e1d1.add(QPolynomial::monomial(1));
  expect_e1d1.add(QPolynomial::monomial(3));
  rep.item("partition.L(e1+d1) = q+q^3",
           engine.l_poly(WeightVector::integral({1}, {1})) == expect_e1d1);

  bool agree = true;
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b) {
      const WeightVector alpha = WeightVector::integral({a}, {b});
      if (roots.height_doubled(alpha) > 2 * 8) continue;
      agree = agree && engine.l_poly(alpha) == l_oracle(alpha, roots);
    }
  rep.item("partition.dp == oracle on n=1 box", agree);
}

void check_kostka(CheckReport& rep) {
  const DominantWeightPair zero({0}, {0});
  rep.item("kostka.K((1;0),(0;0)) = q",
           kostka_poly(DominantWeightPair({1}, {0}), zero) == QPolynomial::monomial(1));
  rep.item("kostka.K((0;1),(0;0)) = q^2",
           kostka_poly(DominantWeightPair({0}, {1}), zero) == QPolynomial::monomial(2));

  bool norm = true;
  for (int n = 1; n <= 2 && norm; ++n) {
    std::vector<std::vector<long long>> doms;
    if (n == 1) {
      for (long long a = 0; a <= 2; ++a) doms.push_back({a});
    } else {
      for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= a; ++b) doms.push_back({a, b});
    }
    for (const auto& l1 : doms)
      for (const auto& l0 : doms) {
        const DominantWeightPair lam(l1, l0);
        norm = norm && kostka_poly(lam, lam) == QPolynomial::one();
      }
  }
  rep.item("kostka.K(lam,lam) = 1 for coords<=2, n<=2", norm);

  const LaurentPolynomial open_stalk =
      stalk_poincare(DominantWeightPair({1}, {0}), DominantWeightPair({1}, {0}), 5);
  rep.item("kostka.stalk open stratum = q^-5",
           open_stalk == LaurentPolynomial(-5, QPolynomial::one()));
}

void check_orbits(CheckReport& rep) {
  rep.item("orbits.dual (3,1,0,-2) -> (2,0,-1,-3)",
           dual_signature({3, 1, 0, -2}) == std::vector<long long>({2, 0, -1, -3}));
  rep.item("orbits.bijection theta=(1,0)",
           partition_to_selfdual({1, 0}) == std::vector<long long>({1, 0, 0, -1}) &&
               selfdual_to_partition({1, 0, 0, -1}) == std::vector<long long>({1, 0}));

  const auto rep21 = orbit_representative(make_orbit_label({1, 0}, {2, 1}));
  rep.item("orbits.representative (1,0),(2,1) lattice (-3,-1,1,3)",
           rep21.lattice_exponents == std::vector<long long>({-3, -1, 1, 3}));

  const LeviType levi = levi_type(make_orbit_label({2, 1, 1, 0}, {0, 0, 0, 0}));
  rep.item("orbits.levi (2,1,1,0) = Sp(2)xGL(2)xGL(1)",
           levi.m0 == 1 && levi.to_string() == "Sp(2)xGL(2)xGL(1)");

  const HasseDiagram h = closure_hasse(1, 1);
  bool chain = h.labels.size() == 4 && h.edges.size() == 3;
  rep.item("orbits.hasse n=1 bound=1 is a 4-chain", chain);
}

void check_exceptional(CheckReport& rep) {
  const ExceptionalCase f4 = case_data(ExceptionalName::F4);
  const ExceptionalCase g3 = case_data(ExceptionalName::G3);
  rep.item("exceptional.F4 simple roots = 4, fiber = 6",
           f4.borel_simple_roots.size() == 4 && f4.odd_fiber_weights.size() == 6);
  rep.item("exceptional.G3 simple roots = 3, fiber = 7",
           g3.borel_simple_roots.size() == 3 && g3.odd_fiber_weights.size() == 7);
  rep.item("exceptional.positive root counts B3=9, G2=6",
           positive_root_count(cartan_B(3)) == 9 && positive_root_count(cartan_G2()) == 6);
  rep.item("exceptional.dim F4 = 15", hesselink_dim(ExceptionalName::F4) == 15,
           "computed " + std::to_string(hesselink_dim(ExceptionalName::F4)));
  rep.item("exceptional.dim G3 = 13", hesselink_dim(ExceptionalName::G3) == 13,
           "computed " + std::to_string(hesselink_dim(ExceptionalName::G3)));
}

int run_check(const std::string& suite, std::ostream& out) {
  CheckReport rep{out};
  const bool all = suite == "all";
  if (all || suite == "roots") check_roots(rep);
  if (all || suite == "weyl") check_weyl(rep);
  if (all || suite == "partition") check_partition(rep);
  if (all || suite == "kostka") check_kostka(rep);
  if (all || suite == "orbits") check_orbits(rep);
  if (all || suite == "exceptional") check_exceptional(rep);
  out << (rep.failures == 0 ? "all checks passed" : "checks FAILED") << "\n";
  return rep.failures == 0 ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of the orthosymplectic Satake correspondence: odd root "
               "systems, graded vector partition functions, super Kostka polynomials, orbit "
               "posets, and the exceptional dimension identities."};
  app.require_subcommand(1);
  int exit_code = 0;

  // roots ------------------------------------------------------------------
  auto common_roots = std::make_shared<CommonFlags>();
  CLI::App* roots_cmd = app.add_subcommand("roots", "List the odd positive roots");
  roots_cmd->add_option("--n", common_roots->n, "rank")->required()->check(CLI::PositiveNumber);
  roots_cmd->add_option("--format", common_roots->format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  roots_cmd->callback([&out, common_roots]() {
    const OddRootSystem rs = odd_positive_roots(common_roots->n);
    if (common_roots->format == "json") {
      json jroots = json::array();
      for (const auto& r : rs.roots()) jroots.push_back(weight_to_json(r));
      out << json{{"n", rs.rank()}, {"count", rs.size()}, {"roots", jroots}}.dump() << "\n";
    } else {
      out << rs.size() << " odd positive roots at rank " << rs.rank() << "\n";
      for (std::size_t i = 0; i < rs.size(); ++i)
        out << "  " << rs.roots()[i].to_string() << " (h=" << rs.root_height_doubled(i) / 2
            << ")\n";
    }
  });

  // lpoly ------------------------------------------------------------------
  auto lp = std::make_shared<CommonFlags>();
  auto lp_alpha1 = std::make_shared<std::string>();
  auto lp_alpha0 = std::make_shared<std::string>();
  auto lp_engine = std::make_shared<std::string>("dp");
  CLI::App* lpoly_cmd = app.add_subcommand("lpoly", "Graded vector partition function L_alpha(q)");
  lpoly_cmd->add_option("--n", lp->n, "rank")->required()->check(CLI::PositiveNumber);
  lpoly_cmd->add_option("--alpha1", *lp_alpha1, "delta-side coordinates (comma separated)")
      ->required();
  lpoly_cmd->add_option("--alpha0", *lp_alpha0, "eps-side coordinates (comma separated)")
      ->required();
  lpoly_cmd->add_option("--engine", *lp_engine, "dp|oracle")
      ->check(CLI::IsMember({"dp", "oracle"}));
  lpoly_cmd->add_option("--oracle-bound", lp->oracle_bound, "height budget for the oracle")
      ->envname("OSK_ORACLE_BOUND");
  lpoly_cmd->add_option("--format", lp->format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  lpoly_cmd->callback([&out, lp, lp_alpha1, lp_alpha0, lp_engine]() {
    const WeightVector alpha = WeightVector::integral(
        parse_coords(*lp_alpha1, lp->n, "--alpha1"), parse_coords(*lp_alpha0, lp->n, "--alpha0"));
    const OddRootSystem roots = odd_positive_roots(lp->n);
    QPolynomial poly;
    if (*lp_engine == "oracle") {
      poly = l_oracle(alpha, roots, lp->oracle_bound);
    } else {
      PartitionCounter engine(roots);
      poly = engine.l_poly(alpha);
    }
    if (lp->format == "json")
      out << poly_to_json(poly).dump() << "\n";
    else
      out << poly.to_string() << "\n";
  });

  // kostka / stalk -----------------------------------------------------------
  auto add_pair_options = [](CLI::App* cmd, std::shared_ptr<CommonFlags> flags,
                             std::shared_ptr<std::array<std::string, 4>> weights) {
    cmd->add_option("--n", flags->n, "rank")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--lam1", (*weights)[0], "dominant Sp weight (delta side)")->required();
    cmd->add_option("--lam0", (*weights)[1], "dominant SO weight (eps side)")->required();
    cmd->add_option("--mu1", (*weights)[2], "dominant Sp weight (delta side)")->required();
    cmd->add_option("--mu0", (*weights)[3], "dominant SO weight (eps side)")->required();
    cmd->add_option("--jobs", flags->jobs, "parallel width of the Weyl-pair reduction")
        ->check(CLI::PositiveNumber)
        ->envname("OSK_JOBS");
    cmd->add_option("--max-rank", flags->max_rank, "enumeration guard for the Weyl sum")
        ->check(CLI::PositiveNumber)
        ->envname("OSK_MAX_RANK");
    cmd->add_option("--format", flags->format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto kflags = std::make_shared<CommonFlags>();
  auto kweights = std::make_shared<std::array<std::string, 4>>();
  CLI::App* kostka_cmd = app.add_subcommand("kostka", "Super Kostka polynomial K_{lam,mu}(q)");
  add_pair_options(kostka_cmd, kflags, kweights);
  kostka_cmd->callback([&out, kflags, kweights]() {
    const DominantWeightPair lam(parse_coords((*kweights)[0], kflags->n, "--lam1"),
                                 parse_coords((*kweights)[1], kflags->n, "--lam0"));
    const DominantWeightPair mu(parse_coords((*kweights)[2], kflags->n, "--mu1"),
                                parse_coords((*kweights)[3], kflags->n, "--mu0"));
    KostkaOptions opts;
    opts.jobs = kflags->jobs;
    opts.max_rank = kflags->max_rank;
    const QPolynomial k = kostka_poly(lam, mu, opts);
    if (kflags->format == "json")
      out << poly_to_json(k).dump() << "\n";
    else
      out << k.to_string() << "\n";
  });

  auto sflags = std::make_shared<CommonFlags>();
  auto sweights = std::make_shared<std::array<std::string, 4>>();
  auto sdim = std::make_shared<long long>(-1);
  CLI::App* stalk_cmd =
      app.add_subcommand("stalk", "IC-stalk Poincare polynomial at the mu orbit");
  add_pair_options(stalk_cmd, sflags, sweights);
  stalk_cmd->add_option("--dim", *sdim, "dimension of the mu orbit (required, never guessed)")
      ->required();
  stalk_cmd->callback([&out, sflags, sweights, sdim]() {
    if (*sdim < 0) throw std::invalid_argument("--dim must be nonnegative");
    const DominantWeightPair lam(parse_coords((*sweights)[0], sflags->n, "--lam1"),
                                 parse_coords((*sweights)[1], sflags->n, "--lam0"));
    const DominantWeightPair mu(parse_coords((*sweights)[2], sflags->n, "--mu1"),
                                parse_coords((*sweights)[3], sflags->n, "--mu0"));
    KostkaOptions opts;
    opts.jobs = sflags->jobs;
    opts.max_rank = sflags->max_rank;
    const LaurentPolynomial stalk = stalk_poincare(lam, mu, *sdim, opts);
    if (sflags->format == "json")
      out << laurent_to_json(stalk).dump() << "\n";
    else
      out << stalk.to_string() << "\n";
  });

  // orbit --------------------------------------------------------------------
  auto oflags = std::make_shared<CommonFlags>();
  auto otheta = std::make_shared<std::string>();
  auto ozeta = std::make_shared<std::string>();
  CLI::App* orbit_cmd =
      app.add_subcommand("orbit", "Representative and stabilizer type of a relevant orbit");
  orbit_cmd->add_option("--n", oflags->n, "rank")->required()->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--theta", *otheta, "partition (comma separated)")->required();
  orbit_cmd->add_option("--zeta", *ozeta, "partition (comma separated)")->required();
  orbit_cmd->add_option("--format", oflags->format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  orbit_cmd->callback([&out, oflags, otheta, ozeta]() {
    const OrbitLabel label = make_orbit_label(parse_coords(*otheta, oflags->n, "--theta"),
                                              parse_coords(*ozeta, oflags->n, "--zeta"));
    const OrbitRepresentative rep = orbit_representative(label);
    const LeviType levi = levi_type(label);
    if (oflags->format == "json") {
      json gl = json::object();
      for (const auto& [value, mult] : levi.gl_blocks) gl[std::to_string(value)] = mult;
      out << json{{"theta", label.theta},
                  {"zeta", label.zeta},
                  {"vector_exponents", rep.vector_exponents},
                  {"lattice_exponents", rep.lattice_exponents},
                  {"levi", json{{"m0", levi.m0}, {"gl_blocks", gl}}}}
                 .dump()
          << "\n";
    } else {
      out << label.to_string() << "\n";
      out << "vector exponents: ";
      for (std::size_t i = 0; i < rep.vector_exponents.size(); ++i)
        out << (i ? "," : "") << rep.vector_exponents[i];
      out << "\nlattice exponents: ";
      for (std::size_t i = 0; i < rep.lattice_exponents.size(); ++i)
        out << (i ? "," : "") << rep.lattice_exponents[i];
      out << "\nLevi: " << levi.to_string() << "\n";
    }
  });

  // poset --------------------------------------------------------------------
  auto pflags = std::make_shared<CommonFlags>();
  auto pbound = std::make_shared<long long>(1);
  CLI::App* poset_cmd = app.add_subcommand("poset", "Closure order on relevant orbit labels");
  poset_cmd->add_option("--n", pflags->n, "rank")->required()->check(CLI::PositiveNumber);
  poset_cmd->add_option("--bound", *pbound, "max partition entry")
      ->required()
      ->check(CLI::NonNegativeNumber);
  poset_cmd->add_option("--format", pflags->format, "json|dot")
      ->check(CLI::IsMember({"json", "dot"}));
  poset_cmd->callback([&out, pflags, pbound]() {
    const HasseDiagram h = closure_hasse(*pbound, pflags->n);
    if (pflags->format == "dot")
      out << hasse_to_dot(h);
    else
      out << hasse_to_json(h).dump() << "\n";
  });

  // dual ---------------------------------------------------------------------
  auto dsig = std::make_shared<std::string>();
  auto dformat = std::make_shared<std::string>("json");
  CLI::App* dual_cmd = app.add_subcommand("dual", "Dual of a weakly decreasing signature");
  dual_cmd->add_option("--sig", *dsig, "signature (comma separated)")->required();
  dual_cmd->add_option("--format", *dformat, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  dual_cmd->callback([&out, dsig, dformat]() {
    const auto dual = dual_signature(parse_int_list(*dsig, "--sig"));
    if (*dformat == "json") {
      out << json{{"dual", dual}}.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < dual.size(); ++i) out << (i ? "," : "") << dual[i];
      out << "\n";
    }
  });

  // check --------------------------------------------------------------------
  auto suite = std::make_shared<std::string>("all");
  CLI::App* check_cmd = app.add_subcommand("check", "Run the identity suites");
  check_cmd->add_option("--suite", *suite, "all|roots|weyl|partition|kostka|orbits|exceptional")
      ->check(CLI::IsMember({"all", "roots", "weyl", "partition", "kostka", "orbits",
                             "exceptional"}));
  check_cmd->callback([&out, suite, &exit_code]() { exit_code = run_check(*suite, out); });

  // ---------------------------------------------------------------------------
  std::vector<const char*> argv;
  argv.push_back("osk");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const limit_error& e) {
    err << "limit error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace osk
