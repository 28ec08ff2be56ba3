#include "kconj/json_io.hpp"

#include "kconj/errors.hpp"

namespace kconj {

nlohmann::json to_json(const RingElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : a.terms()) out.push_back({{"coeff", c.get_str()}, {"exps", e}});
  return out;
}

RingElement ring_element_from_json(const nlohmann::json& j, const RingModelPtr& ring) {
  if (!j.is_array()) throw ParseError("ring element JSON must be an array of terms", 0);
  RingElement out(ring);
  for (const auto& term : j) {
    Exponents e = term.at("exps").get<Exponents>();
    if (e.size() != ring->size()) throw RingMismatch("exponent vector length does not match " + ring->id());
    mpz_class c;
    if (c.set_str(term.at("coeff").get<std::string>(), 10) != 0) throw ParseError("bad coefficient", 0);
    out.add_term(e, c);
  }
  return out;
}

nlohmann::json to_json(const GroupModel& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& gen : g.generators())
    gens.push_back({{"name", gen.name},
                    {"kind", gen.kind == VarKind::Polynomial ? "polynomial" : "laurent"},
                    {"factor_index", gen.factor_index},
                    {"fundamental", gen.fundamental},
                    {"rep_dimension", gen.rep_dimension}});
  return {{"group", g.name()}, {"rank", g.rank()}, {"generators", gens}};
}

nlohmann::json to_json(const IndecomposableVector& v) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : v.coords) coords.push_back(c.get_str());
  return {{"coords", coords}, {"constant_part", v.constant_part.get_str()}};
}

nlohmann::json to_json(const SymmetricLaurent& s) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : s.torus()->ring()->variables()) vars.push_back(v.name);
  return {{"variables", vars}, {"text", s.to_string()}, {"terms", to_json(s.poly())}};
}

nlohmann::json to_json(const IntegralClass& a) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [s, c] : a.components()) {
    nlohmann::json names = nlohmann::json::array();
    for (std::size_t i : s.elements()) names.push_back(KTag::symbol(a.group()->generators()[i].name));
    comps.push_back({{"basis", names}, {"indices", s.elements()}, {"coeff", c.get_str()}});
  }
  return {{"group", a.group()->name()}, {"text", a.to_string()}, {"components", comps}};
}

}  // namespace kconj
