#pragma once

#include <string>

#include "kconj/group_model.hpp"
#include "kconj/parser.hpp"
#include "kconj/ring.hpp"

namespace testing {

inline kconj::RingElement elem(const kconj::GroupPtr& g, const std::string& text) {
  return kconj::parse_ring_element(text, g->ring());
}

inline kconj::RingElement doubled(const kconj::GroupPtr& g, const std::string& text) {
  return kconj::parse_ring_element(text, g->doubled_ring());
}

}  // namespace testing
