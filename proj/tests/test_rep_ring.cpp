#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kconj/errors.hpp"
#include "kconj/json_io.hpp"
#include "kconj/random.hpp"

using namespace kconj;
using testing::doubled;
using testing::elem;

TEST_CASE("multiplication") {
  auto u1 = build_group("U(1)");
  CHECK(elem(u1, "t1") * elem(u1, "t1^-1") == RingElement::constant(u1->ring(), 1));
  auto su2 = build_group("SU(2)");
  CHECK((elem(su2, "y1+2") * elem(su2, "y1+2")).to_string() == "y1^2+4*y1+4");
  CHECK(doubled(u1, "t1'-t1") * doubled(u1, "t1'+t1") == doubled(u1, "t1'^2-t1^2"));
}

TEST_CASE("augmentation") {
  auto su2 = build_group("SU(2)");
  CHECK(elem(su2, "y1^2+4*y1").augmentation() == 0);
  CHECK(elem(su2, "y1+2").augmentation() == 2);
  auto t2 = build_group("T^2");
  CHECK(elem(t2, "t1*t2^-1").augmentation() == 1);
}

TEST_CASE("indecomposable coordinates") {
  auto su2 = build_group("SU(2)");
  auto v = indecomposable_coordinates(elem(su2, "y1^2+4*y1+3"));
  CHECK(v.coords == std::vector<mpz_class>{4});
  CHECK(v.constant_part == 3);
  auto u1 = build_group("U(1)");
  auto w = indecomposable_coordinates(elem(u1, "t1^-1"));
  CHECK(w.coords == std::vector<mpz_class>{-1});
  CHECK(w.constant_part == 1);
  auto q = indecomposable_coordinates(elem(su2, "y1^2"));
  CHECK(q.coords == std::vector<mpz_class>{0});
  CHECK(q.constant_part == 0);
  CHECK_THROWS_AS(indecomposable_coordinates(doubled(su2, "y1'")), RingMismatch);
}

TEST_CASE("polynomial generators have no inverse") {
  auto g = build_group("SU(2) x U(1)");
  CHECK_THROWS_AS(elem(g, "y1^-1"), Error);
  CHECK_FALSE(elem(g, "y1").inverse().has_value());
  CHECK(elem(g, "t1^2").inverse().has_value());
  CHECK(elem(g, "-t1").pow(-1) == elem(g, "-t1^-1"));
  CHECK_THROWS_AS(elem(g, "1+t1").pow(-1), NotInvertible);
}

TEST_CASE("parse errors carry positions") {
  auto g = build_group("SU(2)");
  try {
    elem(g, "y1 + z3");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(elem(g, "y1 +"), ParseError);
  CHECK_THROWS_AS(elem(g, "(y1"), ParseError);
  CHECK_THROWS_AS(elem(g, "y1^"), ParseError);
}

TEST_CASE("operands from different rings are rejected") {
  auto a = build_group("SU(2)"), b = build_group("SU(3)");
  CHECK_THROWS_AS(elem(a, "y1") + elem(b, "y1"), RingMismatch);
  CHECK_THROWS_AS(elem(a, "y1") * doubled(a, "y1"), RingMismatch);
}

TEST_CASE("print/parse and JSON round-trips") {
  std::mt19937_64 rng(7);
  for (const char* name : {"SU(3)", "U(2)", "SU(2) x T^2", "Sp(2)"}) {
    auto g = build_group(name);
    for (int i = 0; i < 100; ++i) {
      RingElement a = random_ring_element(g->ring(), rng);
      CHECK(parse_ring_element(a.to_string(), g->ring()) == a);
      CHECK(ring_element_from_json(to_json(a), g->ring()) == a);
      RingElement b = random_ring_element(g->doubled_ring(), rng);
      CHECK(parse_ring_element(b.to_string(), g->doubled_ring()) == b);
    }
  }
}

TEST_CASE("ring homomorphism laws for the augmentation on random elements") {
  std::mt19937_64 rng(11);
  auto g = build_group("SU(2) x U(2)");
  for (int i = 0; i < 200; ++i) {
    RingElement a = random_ring_element(g->ring(), rng), b = random_ring_element(g->ring(), rng);
    CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
    CHECK((a + b).augmentation() == a.augmentation() + b.augmentation());
  }
}
