#include "kconj/random.hpp"

#include <algorithm>

namespace kconj {

RingElement random_ring_element(const RingModelPtr& ring, std::mt19937_64& rng, const RandomElementShape& shape) {
  std::uniform_int_distribution<int> nterms(1, std::max(1, shape.max_terms));
  std::uniform_int_distribution<int> poly(0, shape.max_poly_exponent);
  std::uniform_int_distribution<int> laurent(-shape.max_laurent_exponent, shape.max_laurent_exponent);
  std::uniform_int_distribution<long> coeff(-shape.max_coefficient, shape.max_coefficient);
  RingElement r(ring);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e(ring->size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ring->kind(i) == VarKind::Polynomial ? poly(rng) : laurent(rng);
    r.add_term(e, coeff(rng));
  }
  return r;
}

KClass random_homogeneous_kclass(const GroupPtr& g, int degree, std::mt19937_64& rng, const RandomElementShape& shape) {
  const auto k = static_cast<std::size_t>(std::clamp<int>(degree, 0, static_cast<int>(g->rank())));
  const auto basis = exterior_basis(g->rank(), k);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  KClass out(g);
  const int n = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < n; ++i) out.add_component(basis[pick(rng)], random_ring_element(g->ring(), rng, shape));
  return out;
}

IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

}  // namespace kconj
