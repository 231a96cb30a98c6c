#include "osk/json_io.hpp"

#include <stdexcept>

namespace osk {

using nlohmann::json;

json weight_to_json(const WeightVector& w) {
  if (!w.is_integral())
    throw std::invalid_argument("half-integral weights are not serialized");
  return json{{"n", w.rank()}, {"delta", w.delta_int()}, {"eps", w.eps_int()}};
}

namespace {

std::vector<long long> int_array(const json& j, const char* field) {
  if (!j.is_array()) throw std::invalid_argument(std::string(field) + " must be an array");
  std::vector<long long> out;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument(std::string(field) + " entries must be integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

}  // namespace

WeightVector weight_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("delta") || !j.contains("eps"))
    throw std::invalid_argument("weight JSON must have fields n, delta, eps");
  if (!j.at("n").is_number_integer())
    throw std::invalid_argument("weight JSON n must be an integer");
  const int n = j.at("n").get<int>();
  auto delta = int_array(j.at("delta"), "delta");
  auto eps = int_array(j.at("eps"), "eps");
  if (static_cast<int>(delta.size()) != n || static_cast<int>(eps.size()) != n)
    throw std::invalid_argument("weight JSON coordinate length mismatch");
  return WeightVector::integral(std::move(delta), std::move(eps));
}

namespace {

json coeff_to_json(const BigInt& c) {
  if (auto small = bigint_to_int64(c)) return *small;
  return bigint_to_string(c);
}

BigInt coeff_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return bigint_from_string(j.get<std::string>());
  throw std::invalid_argument("polynomial coefficient must be an integer or decimal string");
}

}  // namespace

json poly_to_json(const QPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(coeff_to_json(c));
  return json{{"coeffs", coeffs}};
}

QPolynomial poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw std::invalid_argument("polynomial JSON must have field coeffs");
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(coeff_from_json(c));
  return QPolynomial(std::move(coeffs));
}

json laurent_to_json(const LaurentPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(coeff_to_json(c));
  return json{{"offset", p.offset()}, {"coeffs", coeffs}};
}

LaurentPolynomial laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("coeffs"))
    throw std::invalid_argument("Laurent JSON must have fields offset, coeffs");
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(coeff_from_json(c));
  return LaurentPolynomial(j.at("offset").get<int>(), QPolynomial(std::move(coeffs)));
}

json hasse_to_json(const HasseDiagram& h) {
  json labels = json::array();
  for (const auto& label : h.labels)
    labels.push_back(json{{"theta", label.theta}, {"zeta", label.zeta}});
  json edges = json::array();
  for (const auto& [from, to] : h.edges) edges.push_back(json::array({from, to}));
  return json{{"n", h.n}, {"bound", h.bound}, {"labels", labels}, {"edges", edges}};
}

}  // namespace osk
