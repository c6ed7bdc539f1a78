#include "polydec/serialize.hpp"

#include <set>
#include <vector>

#include "system_json.hpp"

namespace polydec {

nlohmann::json system_json(const PolySystem& sys) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : sys.polys()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())
      terms.push_back({m.exponents(), c.to_string()});
    polys.push_back({{"terms", std::move(terms)}});
  }
  return {{"field", sys.ctx().spec_string()},
          {"nvars", sys.nvars()},
          {"polys", std::move(polys)}};
}

PolySystem system_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("nvars") ||
      !j.contains("polys"))
    throw ParseError("system object needs field, nvars, polys");
  if (!j["field"].is_string()) throw ParseError("field must be a string");
  const FieldCtx ctx = FieldCtx::from_spec(j["field"].get<std::string>());
  if (!j["nvars"].is_number_integer() || j["nvars"].get<int>() < 1)
    throw ParseError("nvars must be a positive integer");
  const int nvars = j["nvars"].get<int>();
  if (!j["polys"].is_array()) throw ParseError("polys must be an array");

  PolySystem sys(ctx, nvars);
  int pi = 0;
  for (const auto& jp : j["polys"]) {
    const std::string where = "polys[" + std::to_string(pi++) + "]";
    if (!jp.is_object() || !jp.contains("terms") || !jp["terms"].is_array())
      throw ParseError(where + " must be an object with a terms array");
    PolyAccum acc(ctx, nvars);
    std::set<std::vector<int>> seen;
    for (const auto& jt : jp["terms"]) {
      if (!jt.is_array() || jt.size() != 2)
        throw ParseError(where + ": term must be [exponents, coefficient]");
      const auto& je = jt[0];
      if (!je.is_array() || static_cast<int>(je.size()) != nvars)
        throw ParseError(where + ": exponent vector length != nvars");
      std::vector<int> exps;
      exps.reserve(nvars);
      for (const auto& e : je) {
        if (!e.is_number_integer() || e.get<int>() < 0)
          throw ParseError(where + ": exponents must be non-negative integers");
        exps.push_back(e.get<int>());
      }
      if (!seen.insert(exps).second)
        throw ParseError(where + ": duplicate monomial");
      if (!jt[1].is_string())
        throw ParseError(where + ": coefficient must be a string");
      FieldElem c = ctx.from_string(jt[1].get<std::string>());
      if (c.is_zero()) throw ParseError(where + ": zero coefficient stored");
      acc.add(Monomial(std::move(exps)), c);
    }
    sys.push_back(acc.take());
  }
  return sys;
}

std::string serialize(const PolySystem& sys) { return system_json(sys).dump(); }

PolySystem parse_system(std::string_view bytes) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("JSON parse error at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
  return system_from_json(j);
}

}  // namespace polydec
