#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kconj/graded.hpp"
#include "kconj/group_model.hpp"
#include "kconj/ring.hpp"

namespace kconj {

/// Degree-1 classes are named b[y1], b[t1]: the images of β(λ_i), β(t_j).
struct KTag {
  static std::string symbol(const std::string& generator) { return "b[" + generator + "]"; }
};

/// Element of K*_G(G^Ad) = RG ⊗ Λ[b[..]]; K^0 holds the even exterior
/// degrees, K^1 the odd ones.
using KClass = GradedForm<KTag>;

KClass k_mul(const KClass& a, const KClass& b);

/// Σ_i ∂ρ/∂y_i b[y_i] + Σ_j ∂ρ/∂t_j b[t_j].
KClass beta_ad(const RingElement& rho, const GroupPtr& g);

/// Reduction of every coefficient modulo IG, landing in Λ[b[..]] = K*(G).
IntegralClass forgetful(const KClass& a);

/// σ · β^Ad(ρ_1) ⋯ β^Ad(ρ_k) for distinct generators ρ_k ∈ {λ_i, t_j},
/// given by inventory index.
KClass structure_isomorphism(const RingElement& sigma, std::span<const std::size_t> reps,
                             const GroupPtr& g);
KClass structure_isomorphism(const RingElement& sigma, const std::vector<std::string>& rep_names,
                             const GroupPtr& g);

/// The representation class λ_i = y_i + dim λ_i, or t_j.
RingElement q_generator_class(const GroupModel& g, std::size_t i);

struct PoincareRanks {
  long k0 = 0;
  long k1 = 0;
};

/// Ranks of K^0 and K^1 as free RG-modules, counted from the exterior basis.
PoincareRanks poincare_ranks(const GroupModel& g);

/// Filtration level p with a ∈ F_p, F_0 = RG and F_{-1}/F_0 = RG ⊗ P:
/// minus the largest exterior degree present.
int filtration_level(const KClass& a);

struct Presentation {
  std::string group;
  std::vector<std::string> ring_generators;
  std::vector<std::string> exterior_generators;
  std::vector<std::string> relations;
  PoincareRanks ranks;
  std::vector<std::string> k0_basis;
  std::vector<std::string> k1_basis;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

Presentation present(const GroupModel& g);

KClass parse_kclass(std::string_view text, const GroupPtr& g);

}  // namespace kconj
