#include "gwadams/poly_json.hpp"

namespace gwadams::poly {

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : p.context()->vars()) vars.push_back({{"name", v.name}, {"laurent", v.laurent_allowed}});
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) terms.push_back({{"coeff", t.coeff.get_str()}, {"exps", t.mono.exps}});
  return {{"vars", vars}, {"terms", terms}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    std::vector<VarId> vars;
    for (const auto& v : j.at("vars")) vars.push_back({v.at("name").get<std::string>(), v.value("laurent", false)});
    auto ctx = VarContext::make(std::move(vars));
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      Monomial m{t.at("exps").get<std::vector<std::int32_t>>()};
      if (m.exps.size() != ctx->size()) throw ParseError("exponent array length does not match vars");
      Integer c;
      const auto& cj = t.at("coeff");
      if (cj.is_number_integer()) {
        c = Integer(cj.get<long>());
      } else if (c.set_str(cj.get<std::string>(), 10) != 0) {
        throw ParseError("bad integer coefficient: " + cj.get<std::string>());
      }
      terms.push_back({std::move(m), std::move(c)});
    }
    return MultiPoly::from_terms(ctx, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  } catch (const ContextError& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace gwadams::poly
