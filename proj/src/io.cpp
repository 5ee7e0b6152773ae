#include "qbern/io.hpp"

#include <stdexcept>

namespace qbern {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

}  // namespace

Json poly_to_json(const PolyZ& p) {
  Json out = Json::array();
  for (const Rational& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

PolyZ poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<Rational> c;
  for (const Json& e : j) c.push_back(rational_from_json(e));
  return PolyZ(std::move(c));
}

Json stream_to_json(const CoefficientStream& s) {
  Json out;
  out["coefficients"] = Json::array();
  for (const Rational& c : s.coefficients) out["coefficients"].push_back(to_string(c));
  if (s.finite()) {
    out["tail"] = "finite";
  } else {
    out["tail"] = Json{{"geometric", to_string(*s.geometric_ratio)}};
  }
  return out;
}

CoefficientStream stream_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
    throw std::invalid_argument("stream needs a \"coefficients\" array");
  std::vector<Rational> c;
  for (const Json& e : j["coefficients"]) c.push_back(rational_from_json(e));
  if (!j.contains("tail") || (j["tail"].is_string() && j["tail"].get<std::string>() == "finite"))
    return CoefficientStream{std::move(c), std::nullopt};
  const Json& tail = j["tail"];
  if (tail.is_object() && tail.contains("geometric"))
    return CoefficientStream::geometric(std::move(c), rational_from_json(tail["geometric"]));
  throw std::invalid_argument("tail must be \"finite\" or {\"geometric\": ratio}");
}

Json appell_to_json(const std::vector<AppellEntry>& report) {
  Json out = Json::array();
  for (const AppellEntry& e : report) out.push_back(Json{{"kind", to_int(e.kind)}, {"n", e.n}, {"pass", e.pass}});
  return out;
}

}  // namespace qbern
