#include "kconj/parser.hpp"

namespace kconj {

namespace {

struct RingTraits {
  using Value = RingElement;
  RingModelPtr ring;

  Value from_integer(const mpz_class& n) const { return RingElement::constant(ring, n); }

  Value identifier(const std::string& name, std::size_t pos) const {
    auto idx = ring->find(name);
    if (!idx) throw ParseError("unknown generator '" + name + "' in " + ring->id(), pos);
    return RingElement::variable(ring, *idx);
  }

  Value power(const Value& base, long e, std::size_t pos) const {
    try {
      return base.pow(e);
    } catch (const NotInvertible& err) {
      throw ParseError(err.what(), pos);
    }
  }
};

}  // namespace

RingElement parse_ring_element(std::string_view text, const RingModelPtr& ring) {
  RingTraits traits{ring};
  return detail::ExpressionParser<RingTraits>(text, traits).parse();
}

}  // namespace kconj
