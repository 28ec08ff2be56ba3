#include "kconj/ktheory.hpp"

#include <set>

#include "kconj/errors.hpp"

namespace kconj {

KClass k_mul(const KClass& a, const KClass& b) { return a * b; }

KClass beta_ad(const RingElement& rho, const GroupPtr& g) {
  if (!(*rho.ring() == *g->ring()))
    throw RingMismatch("beta_ad expects an element of " + g->ring()->id() + ", got " + rho.ring()->id());
  KClass out(g);
  for (std::size_t i = 0; i < g->rank(); ++i) out.add_component(ExteriorIndex::single(i), rho.derivative(i));
  return out;
}

IntegralClass forgetful(const KClass& a) {
  IntegralClass out(a.group());
  for (const auto& [s, c] : a.components()) out.add_component(s, c.augmentation());
  return out;
}

RingElement q_generator_class(const GroupModel& g, std::size_t i) {
  const auto& gen = g.generators().at(i);
  RingElement v = RingElement::variable(g.ring(), i);
  if (gen.kind == VarKind::Polynomial) v += RingElement::constant(g.ring(), gen.rep_dimension);
  return v;
}

KClass structure_isomorphism(const RingElement& sigma, std::span<const std::size_t> reps,
                             const GroupPtr& g) {
  std::set<std::size_t> seen;
  KClass acc = KClass::scalar(g, sigma);
  for (std::size_t i : reps) {
    if (i >= g->rank()) throw UnknownGenerator("generator index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second)
      throw DuplicateGenerator("generator " + g->generators()[i].name + " repeated; product would vanish");
    acc = acc * beta_ad(q_generator_class(*g, i), g);
  }
  return acc;
}

KClass structure_isomorphism(const RingElement& sigma, const std::vector<std::string>& rep_names,
                             const GroupPtr& g) {
  std::vector<std::size_t> idx;
  for (const auto& name : rep_names) idx.push_back(g->generator_index(name));
  return structure_isomorphism(sigma, idx, g);
}

PoincareRanks poincare_ranks(const GroupModel& g) {
  PoincareRanks r;
  for (std::size_t k = 0; k <= g.rank(); ++k) {
    long n = static_cast<long>(exterior_basis(g.rank(), k).size());
    (k % 2 == 0 ? r.k0 : r.k1) += n;
  }
  return r;
}

int filtration_level(const KClass& a) { return -a.max_degree(); }

Presentation present(const GroupModel& g) {
  Presentation p;
  p.group = g.name();
  for (const auto& gen : g.generators()) {
    p.ring_generators.push_back(gen.kind == VarKind::Laurent ? gen.name + "^±1" : gen.name);
    p.exterior_generators.push_back(KTag::symbol(gen.name));
  }
  p.relations = {"b^2=0", "anticommute"};
  p.ranks = poincare_ranks(g);
  for (std::size_t k = 0; k <= g.rank(); ++k)
    for (ExteriorIndex s : exterior_basis(g.rank(), k))
      (k % 2 == 0 ? p.k0_basis : p.k1_basis).push_back(exterior_name<KTag>(g, s));
  return p;
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string module_sum(const std::vector<std::string>& basis) {
  if (basis.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& b : basis) parts.push_back(b == "1" ? "R(G)" : "R(G)·" + b);
  return join(parts, " ⊕ ");
}

}  // namespace

std::string Presentation::to_text() const {
  std::string ring = ring_generators.empty() ? "Z" : "Z[" + join(ring_generators, ",") + "]";
  std::string out;
  out += "K_G(G) = R(G) ⊗ Λ[" + join(exterior_generators, ", ") + "]  for G = " + group + "\n";
  out += "R(G) = " + ring + "; K^0 = " + module_sum(k0_basis) + ", K^1 = " + module_sum(k1_basis) + "\n";
  out += "relations: " + join(relations, ", ") + "\n";
  out += "ranks over R(G): K^0 = " + std::to_string(ranks.k0) + ", K^1 = " + std::to_string(ranks.k1) + "\n";
  return out;
}

nlohmann::json Presentation::to_json() const {
  return {{"group", group},
          {"ring_generators", ring_generators},
          {"generators", exterior_generators},
          {"relations", relations},
          {"ranks", {{"K0", ranks.k0}, {"K1", ranks.k1}}},
          {"K0_basis", k0_basis},
          {"K1_basis", k1_basis}};
}

KClass parse_kclass(std::string_view text, const GroupPtr& g) { return parse_graded_form<KTag>(text, g); }

}  // namespace kconj
