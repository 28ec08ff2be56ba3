#pragma once

#include <cstdint>
#include <random>

#include "kconj/group_model.hpp"
#include "kconj/ktheory.hpp"
#include "kconj/linalg.hpp"
#include "kconj/ring.hpp"

namespace kconj {

struct RandomElementShape {
  int max_terms = 4;
  int max_poly_exponent = 2;
  int max_laurent_exponent = 2;
  long max_coefficient = 5;
};

RingElement random_ring_element(const RingModelPtr& ring, std::mt19937_64& rng,
                                const RandomElementShape& shape = {});

/// Homogeneous class of the given exterior degree (clamped to the rank).
KClass random_homogeneous_kclass(const GroupPtr& g, int degree, std::mt19937_64& rng,
                                 const RandomElementShape& shape = {});

IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng);

}  // namespace kconj
