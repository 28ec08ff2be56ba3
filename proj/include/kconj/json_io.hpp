#pragma once

#include <json.hpp>

#include "kconj/characters.hpp"
#include "kconj/differentials.hpp"
#include "kconj/group_model.hpp"
#include "kconj/ktheory.hpp"
#include "kconj/ring.hpp"

namespace kconj {

/// [{"coeff": "<decimal>", "exps": [..]}, ...] in canonical term order.
nlohmann::json to_json(const RingElement& a);
RingElement ring_element_from_json(const nlohmann::json& j, const RingModelPtr& ring);

nlohmann::json to_json(const GroupModel& g);
nlohmann::json to_json(const IndecomposableVector& v);
nlohmann::json to_json(const SymmetricLaurent& s);
nlohmann::json to_json(const IntegralClass& a);

template <class Tag>
nlohmann::json to_json(const GradedForm<Tag>& f) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [s, c] : f.components()) {
    nlohmann::json names = nlohmann::json::array();
    for (std::size_t i : s.elements()) names.push_back(Tag::symbol(f.group()->generators()[i].name));
    comps.push_back({{"basis", names}, {"indices", s.elements()}, {"coeff", to_json(c)}});
  }
  return {{"group", f.group()->name()}, {"text", f.to_string()}, {"components", comps}};
}

template <class Tag>
GradedForm<Tag> graded_form_from_json(const nlohmann::json& j, const GroupPtr& g) {
  GradedForm<Tag> out(g);
  for (const auto& comp : j.at("components")) {
    ExteriorIndex s;
    for (const auto& i : comp.at("indices")) s.bits |= std::uint64_t{1} << i.get<std::size_t>();
    out.add_component(s, ring_element_from_json(comp.at("coeff"), g->ring()));
  }
  return out;
}

}  // namespace kconj
