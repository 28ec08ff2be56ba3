#include "kconj/differentials.hpp"

namespace kconj {

DiffForm d(const RingElement& a, const GroupPtr& g) {
  if (!(*a.ring() == *g->ring()))
    throw RingMismatch("d expects an element of " + g->ring()->id() + ", got " + a.ring()->id());
  DiffForm out(g);
  for (std::size_t i = 0; i < g->rank(); ++i) out.add_component(ExteriorIndex::single(i), a.derivative(i));
  return out;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) { return a * b; }

KClass phi(const DiffForm& a) { return a.retag<KTag>(); }

DiffForm parse_diff_form(std::string_view text, const GroupPtr& g) {
  return parse_graded_form<DiffTag>(text, g);
}

}  // namespace kconj
