#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kconj/errors.hpp"
#include "kconj/ktheory.hpp"
#include "kconj/random.hpp"

using namespace kconj;
using testing::elem;

namespace {

KClass k(const GroupPtr& g, const std::string& text) { return parse_kclass(text, g); }

}  // namespace

TEST_CASE("degree-one generators square to zero and anticommute") {
  auto g = build_group("SU(2) x U(1)");
  auto z1 = KClass::generator(g, 0), z2 = KClass::generator(g, 1);
  CHECK(k_mul(z1, z1).is_zero());
  CHECK(k_mul(z1, z2) == -k_mul(z2, z1));
  CHECK(k_mul(KClass::scalar(g, elem(g, "y1")), z1) == k(g, "y1 b[y1]"));
}

TEST_CASE("beta_ad examples") {
  auto su2 = build_group("SU(2)");
  CHECK(beta_ad(elem(su2, "y1^2+4*y1+3"), su2) == k(su2, "(2*y1+4) b[y1]"));
  CHECK(beta_ad(elem(su2, "y1^2+4*y1+3"), su2).to_string() == "(2*y1+4) b[y1]");
  auto u1 = build_group("U(1)");
  CHECK(beta_ad(elem(u1, "t1^-1"), u1) == k(u1, "-t1^-2 b[t1]"));
  CHECK(beta_ad(elem(u1, "7"), u1).is_zero());
  CHECK_THROWS_AS(beta_ad(elem(u1, "t1"), su2), RingMismatch);
}

TEST_CASE("forgetful map examples") {
  auto su2 = build_group("SU(2)");
  CHECK(forgetful(k(su2, "y1 b[y1]")).is_zero());
  CHECK(forgetful(k(su2, "(2*y1+4) b[y1]")).to_string() == "4 b[y1]");
  auto u1 = build_group("U(1)");
  CHECK(forgetful(k(u1, "t1 b[t1]")).to_string() == "b[t1]");
}

TEST_CASE("structure isomorphism") {
  auto su2 = build_group("SU(2)");
  CHECK(structure_isomorphism(elem(su2, "1"), std::vector<std::string>{"y1"}, su2) == KClass::generator(su2, 0));
  auto u1 = build_group("U(1)");
  CHECK(structure_isomorphism(elem(u1, "1"), std::vector<std::string>{"t1"}, u1) == KClass::generator(u1, 0));
  auto g = build_group("SU(2) x U(1)");
  CHECK(structure_isomorphism(elem(g, "y1"), std::vector<std::string>{"y1", "t1"}, g) == k(g, "y1 b[y1] b[t1]"));
  CHECK_THROWS_AS(structure_isomorphism(elem(g, "1"), std::vector<std::string>{"y1", "y1"}, g), DuplicateGenerator);
}

TEST_CASE("Poincaré ranks") {
  auto ranks = [](const char* name) { return poincare_ranks(*build_group(name)); };
  CHECK(ranks("SU(2)").k0 == 1);
  CHECK(ranks("SU(2)").k1 == 1);
  CHECK(ranks("SU(3)").k0 == 2);
  CHECK(ranks("SU(3)").k1 == 2);
  CHECK(ranks("T^3").k0 == 4);
  CHECK(ranks("T^3").k1 == 4);
  CHECK(ranks("trivial").k0 == 1);
  CHECK(ranks("trivial").k1 == 0);
}

TEST_CASE("presentation text and JSON") {
  auto p = present(*build_group("SU(2)"));
  CHECK(p.to_text().find("R(G) = Z[y1]; K^0 = R(G), K^1 = R(G)·b[y1]") != std::string::npos);
  auto j = present(*build_group("SU(2) x SU(3) x T^1")).to_json();
  CHECK(j["ranks"]["K0"] == 8);
  CHECK(j["ranks"]["K1"] == 8);
  CHECK(j["generators"].size() == 4);
}

TEST_CASE("filtration level is minus the top exterior degree") {
  auto g = build_group("SU(3)");
  CHECK(filtration_level(k(g, "y1 + 3")) == 0);
  CHECK(filtration_level(k(g, "b[y1] + 1")) == -1);
  CHECK(filtration_level(k(g, "b[y1]*b[y2]")) == -2);
}

TEST_CASE("graded commutativity on random homogeneous classes") {
  std::mt19937_64 rng(13);
  auto g = build_group("SU(3) x U(1)");
  std::uniform_int_distribution<int> deg(0, 3);
  for (int i = 0; i < 100; ++i) {
    KClass a = random_homogeneous_kclass(g, deg(rng), rng), b = random_homogeneous_kclass(g, deg(rng), rng);
    KClass ba = k_mul(b, a);
    CHECK(k_mul(a, b) == ((*a.degree() * *b.degree()) % 2 ? -ba : ba));
    if (*a.degree() % 2) CHECK(k_mul(a, a).is_zero());
  }
}

TEST_CASE("Leibniz rule and forgetful compatibility") {
  std::mt19937_64 rng(17);
  auto g = build_group("U(2) x Sp(1)");
  for (int i = 0; i < 100; ++i) {
    RingElement a = random_ring_element(g->ring(), rng), b = random_ring_element(g->ring(), rng);
    CHECK(beta_ad(a * b, g) == a * beta_ad(b, g) + b * beta_ad(a, g));
    auto v = indecomposable_coordinates(a);
    auto f = forgetful(beta_ad(a, g));
    for (std::size_t j = 0; j < g->rank(); ++j) CHECK(f.coefficient(ExteriorIndex::single(j)) == v.coords[j]);
  }
}

TEST_CASE("parsing K-classes") {
  auto g = build_group("SU(2) x U(1)");
  CHECK(k(g, "b[y1]^2").is_zero());
  CHECK(k(g, "b[t1] b[y1]") == -k(g, "b[y1] ∧ b[t1]"));
  CHECK_THROWS_AS(k(g, "b[y7]"), Error);
  CHECK_THROWS_AS(k(g, "b[y1]^-1"), ParseError);
  CHECK_THROWS_AS(k(g, "b[y1"), ParseError);
}
