#include <limits>

#include "qstirl/cli/cli.hpp"

namespace qstirl::cli {

using json = nlohmann::ordered_json;

json to_json(const Integer& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

namespace {

json poly_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

}  // namespace

json to_json(const IdentityValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QPoly>) {
          return poly_json(x);
        } else if constexpr (std::is_same_v<T, QSeries>) {
          json arr = json::array();
          for (const auto& c : x.coefficients()) arr.push_back(poly_json(c));
          return arr;
        } else {
          json arr = json::array();
          for (const auto& c : x.values) arr.push_back(to_json(c));
          return arr;
        }
      },
      v);
}

json to_json(const Certificate& c) {
  json j;
  j["witness"] = c.witness;
  j["input"] = c.input;
  j["output"] = c.output;
  j["input_weight"] = poly_json(c.input_weight);
  j["output_weight"] = poly_json(c.output_weight);
  json checks = json::object();
  for (const auto& [name, ok] : c.checks) checks[name] = ok;
  j["checks"] = checks;
  return j;
}

json to_json(const WitnessSummary& s) {
  json j;
  j["witness"] = s.witness;
  j["elements"] = s.elements;
  j["fixed"] = s.fixed;
  j["failures"] = s.failures;
  j["total_weight"] = poly_json(s.total_weight);
  j["fixed_weight"] = poly_json(s.fixed_weight);
  json certs = json::array();
  for (const auto& c : s.certificates) certs.push_back(to_json(c));
  j["certificates"] = certs;
  return j;
}

json to_json(const IdentityReport& r) {
  json j;
  j["identity"] = r.identity;
  json params = json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["equal"] = r.equal;
  if (!r.checks.empty()) {
    json checks = json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
  }
  if (!r.notes.empty()) {
    json notes = json::object();
    for (const auto& [name, value] : r.notes) notes[name] = value;
    j["notes"] = notes;
  }
  if (r.trace) j["trace"] = to_json(*r.trace);
  return j;
}

}  // namespace qstirl::cli
