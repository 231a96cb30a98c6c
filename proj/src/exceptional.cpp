#include "osk/exceptional.hpp"

#include <sstream>
#include <stdexcept>

#include "osk/root_systems.hpp"

namespace osk {

ExceptionalName exceptional_from_string(const std::string& s) {
  if (s == "F4" || s == "f4") return ExceptionalName::F4;
  if (s == "G3" || s == "g3") return ExceptionalName::G3;
  throw std::invalid_argument("unknown exceptional case: " + s);
}

std::string exceptional_to_string(ExceptionalName name) {
  return name == ExceptionalName::F4 ? "F4" : "G3";
}

std::string ExceptionalWeight::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](long long c2, const std::string& basis) {
    if (c2 == 0) return;
    long long a2 = c2;
    if (first) {
      if (a2 < 0) {
        out << "-";
        a2 = -a2;
      }
      first = false;
    } else {
      out << (a2 < 0 ? "-" : "+");
      if (a2 < 0) a2 = -a2;
    }
    if (a2 % 2 == 0) {
      if (a2 != 2) out << a2 / 2;
    } else {
      out << a2 << "/2";
    }
    out << basis;
  };
  emit(delta2, "d");
  for (int i = 0; i < 3; ++i) emit(eps2[static_cast<std::size_t>(i)], "e" + std::to_string(i + 1));
  if (first) return "0";
  return out.str();
}

namespace {

ExceptionalWeight w(long long d2, long long e1_2, long long e2_2, long long e3_2) {
  return ExceptionalWeight{d2, {e1_2, e2_2, e3_2}};
}

ExceptionalWeight scale_add(const ExceptionalWeight& a, long long c, const ExceptionalWeight& b) {
  ExceptionalWeight r = a;
  r.delta2 += c * b.delta2;
  for (int i = 0; i < 3; ++i)
    r.eps2[static_cast<std::size_t>(i)] += c * b.eps2[static_cast<std::size_t>(i)];
  return r;
}

bool is_zero(const ExceptionalWeight& a) {
  return a.delta2 == 0 && a.eps2[0] == 0 && a.eps2[1] == 0 && a.eps2[2] == 0;
}

// Whether target is a nonnegative-integer combination of the simple roots.
// Exhaustive over coefficient boxes; coefficients of any root in the simple
// basis are tiny for these rank <= 4 systems.
bool in_nonneg_span(const ExceptionalWeight& target,
                    const std::vector<ExceptionalWeight>& simples, int coeff_bound = 8) {
  std::vector<int> coeff(simples.size(), 0);
  while (true) {
    ExceptionalWeight acc = w(0, 0, 0, 0);
    for (std::size_t i = 0; i < simples.size(); ++i)
      acc = scale_add(acc, coeff[i], simples[i]);
    if (acc == target) return true;
    std::size_t pos = 0;
    while (pos < coeff.size() && coeff[pos] == coeff_bound) coeff[pos++] = 0;
    if (pos == coeff.size()) return false;
    ++coeff[pos];
  }
}

std::vector<ExceptionalWeight> odd_weight_candidates(ExceptionalName name) {
  std::vector<ExceptionalWeight> all;
  if (name == ExceptionalName::F4) {
    // Spin rep of so(7) tensored with the 2-dimensional sl(2) module:
    // all sixteen (+-d +-e1 +-e2 +-e3)/2.
    for (int sd = -1; sd <= 1; sd += 2)
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2)
          for (int s3 = -1; s3 <= 1; s3 += 2) all.push_back(w(sd, s1, s2, s3));
  } else {
    // 7-dimensional G2 module (weights 0, +-e1, +-e2, -+(e1+e2), with
    // e3 = -e1-e2 eliminated) tensored with the 2-dimensional sl(2) module.
    const std::vector<ExceptionalWeight> seven = {
        w(0, 0, 0, 0),  w(0, 2, 0, 0),  w(0, -2, 0, 0), w(0, 0, 2, 0),
        w(0, 0, -2, 0), w(0, 2, 2, 0),  w(0, -2, -2, 0)};
    for (const auto& v : seven) {
      all.push_back(scale_add(v, 1, w(2, 0, 0, 0)));
      all.push_back(scale_add(v, -1, w(2, 0, 0, 0)));
    }
  }
  return all;
}

}  // namespace

ExceptionalCase case_data(ExceptionalName name) {
  ExceptionalCase data;
  data.name = name;
  data.levi_cartan = cartan_A1();
  if (name == ExceptionalName::F4) {
    data.even_cartan = cartan_B(3);
    data.borel_simple_roots = {
        w(1, 1, -1, -1),   // (d + e1 - e2 - e3)/2
        w(1, -1, 1, 1),    // (d - e1 + e2 + e3)/2
        w(-1, 1, -1, 1),   // (-d + e1 - e2 + e3)/2
        w(0, 0, 2, -2),    // e2 - e3
    };
    // The six-dimensional fiber subspace of the odd nilradical, as listed.
    data.odd_fiber_weights = {
        w(1, 1, -1, -1),  w(1, -1, 1, 1),  w(1, 1, -1, 1),
        w(1, 1, 1, -1),   w(1, 1, 1, 1),   w(-1, 1, 1, 1),
    };
  } else {
    data.even_cartan = cartan_G2();
    data.borel_simple_roots = {
        w(2, 0, 0, 0),    // d
        w(-2, 2, 0, 0),   // -d + e1
        w(0, -2, 2, 0),   // e2 - e1
    };
    // The fiber is the whole odd part of the nilradical: all odd positive
    // roots (seven of the fourteen odd weights).
    data.odd_fiber_weights = odd_positive_weights(name);
  }
  return data;
}

std::vector<ExceptionalWeight> odd_positive_weights(ExceptionalName name) {
  const ExceptionalCase skeleton = [&] {
    // Simple roots only; avoids recursion through case_data for G3.
    ExceptionalCase d;
    if (name == ExceptionalName::F4) {
      d.borel_simple_roots = {w(1, 1, -1, -1), w(1, -1, 1, 1), w(-1, 1, -1, 1), w(0, 0, 2, -2)};
    } else {
      d.borel_simple_roots = {w(2, 0, 0, 0), w(-2, 2, 0, 0), w(0, -2, 2, 0)};
    }
    return d;
  }();

  std::vector<ExceptionalWeight> positives;
  for (const auto& cand : odd_weight_candidates(name)) {
    if (is_zero(cand)) continue;
    if (in_nonneg_span(cand, skeleton.borel_simple_roots)) positives.push_back(cand);
  }
  return positives;
}

long long hesselink_dim(const ExceptionalCase& data) {
  const long long even_positive = positive_root_count(data.even_cartan);
  const long long levi_positive = positive_root_count(data.levi_cartan);
  const long long base_dim = even_positive - levi_positive;      // even flag base G/P'
  const long long line_dim = positive_root_count(cartan_A1());   // P^1 = SL(2)/B''
  return base_dim + line_dim + static_cast<long long>(data.odd_fiber_weights.size());
}

long long hesselink_dim(ExceptionalName name) { return hesselink_dim(case_data(name)); }

}  // namespace osk
