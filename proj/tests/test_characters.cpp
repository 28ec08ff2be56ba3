#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kconj/characters.hpp"
#include "kconj/errors.hpp"
#include "kconj/random.hpp"

using namespace kconj;
using testing::elem;

namespace {

SymmetricLaurent chr(const GroupPtr& g, const std::string& text) { return parse_character(text, torus_model(*g)); }

}  // namespace

TEST_CASE("fundamental characters") {
  auto su2 = build_group("SU(2)");
  CHECK(fundamental_character(*su2, su2->generators()[0]) == chr(su2, "x1_1 + x1_1^-1"));
  auto u2 = build_group("U(2)");
  CHECK(fundamental_character(*u2, u2->generators()[1]) == chr(u2, "x1_1*x1_2"));
  auto sp1 = build_group("Sp(1)");
  CHECK(fundamental_character(*sp1, sp1->generators()[0]).to_string() ==
        fundamental_character(*su2, su2->generators()[0]).to_string());
}

TEST_CASE("to_character") {
  auto su2 = build_group("SU(2)");
  CHECK(to_character(elem(su2, "y1+2"), *su2) == chr(su2, "x1_1 + x1_1^-1"));
  CHECK(to_character(elem(su2, "y1^2+4*y1+3"), *su2) == chr(su2, "x1_1^2 + 1 + x1_1^-2"));
  auto u1 = build_group("U(1)");
  CHECK(to_character(elem(u1, "t1^-1"), *u1) == chr(u1, "x1_1^-1"));
}

TEST_CASE("from_character") {
  auto su2 = build_group("SU(2)");
  CHECK(from_character(chr(su2, "x1_1^2 + 1 + x1_1^-2"), *su2) == elem(su2, "y1^2+4*y1+3"));
  auto u2 = build_group("U(2)");
  CHECK(from_character(chr(u2, "x1_1^2*x1_2 + x1_1*x1_2^2"), *u2) == elem(u2, "(y1+2)*t1"));
  auto t3 = build_group("T^3");
  CHECK(from_character(chr(t3, "x1_1^3"), *t3) == elem(t3, "t1^3"));
}

TEST_CASE("non-invariant input is rejected") {
  auto su2 = build_group("SU(2)");
  CHECK_THROWS_AS(from_character(chr(su2, "x1_1"), *su2), NotWeylInvariant);
  auto u2 = build_group("U(2)");
  CHECK_THROWS_AS(from_character(chr(u2, "x1_1^2*x1_2"), *u2), NotWeylInvariant);
  auto sp2 = build_group("Sp(2)");
  CHECK_THROWS_AS(from_character(chr(sp2, "x1_1 + x1_2"), *sp2), NotWeylInvariant);
}

TEST_CASE("Sp(1) and SU(2) agree") {
  std::mt19937_64 rng(3);
  auto su2 = build_group("SU(2)"), sp1 = build_group("Sp(1)");
  for (int i = 0; i < 50; ++i) {
    RingElement a = random_ring_element(su2->ring(), rng);
    RingElement b = parse_ring_element(a.to_string(), sp1->ring());
    CHECK(to_character(a, *su2).to_string() == to_character(b, *sp1).to_string());
  }
}

TEST_CASE("round-trip on random elements") {
  std::mt19937_64 rng(5);
  for (const char* name : {"SU(2)", "SU(3)", "SU(4)", "Sp(1)", "Sp(2)", "U(1)", "U(2)", "U(3)", "T^2",
                           "SU(2) x U(2) x T^1"}) {
    auto g = build_group(name);
    CAPTURE(name);
    for (int i = 0; i < 25; ++i) {
      RingElement a = random_ring_element(g->ring(), rng);
      auto c = to_character(a, *g);
      CHECK(c.is_weyl_invariant());
      CHECK(c.eval_at_identity() == a.augmentation());
      CHECK(from_character(c, *g) == a);
    }
  }
}

TEST_CASE("character map is a ring homomorphism") {
  std::mt19937_64 rng(9);
  auto g = build_group("SU(3) x U(1)");
  for (int i = 0; i < 30; ++i) {
    RingElement a = random_ring_element(g->ring(), rng), b = random_ring_element(g->ring(), rng);
    CHECK(to_character(a * b, *g) == to_character(a, *g) * to_character(b, *g));
    CHECK(to_character(a - b, *g) == to_character(a, *g) - to_character(b, *g));
  }
}
