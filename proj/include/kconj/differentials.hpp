#pragma once

#include <string>
#include <string_view>

#include "kconj/graded.hpp"
#include "kconj/ktheory.hpp"

namespace kconj {

struct DiffTag {
  static std::string symbol(const std::string& generator) { return "d" + generator; }
};

/// Element of Ω*_{RG/Z} = RG ⊗ Λ[dy_i, dt_j]. Ω^1 is free on the dy_i, dt_j
/// because RG is a localization of a polynomial ring over Z.
using DiffForm = GradedForm<DiffTag>;

/// Universal derivation RG → Ω^1.
DiffForm d(const RingElement& a, const GroupPtr& g);

DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// RG-algebra map dy_i ↦ b[y_i], dt_j ↦ b[t_j].
KClass phi(const DiffForm& a);

DiffForm parse_diff_form(std::string_view text, const GroupPtr& g);

}  // namespace kconj
