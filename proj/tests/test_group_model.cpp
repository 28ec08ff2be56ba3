#include <doctest.h>

#include "kconj/errors.hpp"
#include "kconj/group_model.hpp"

using namespace kconj;

TEST_CASE("SU(2) has one polynomial generator of dimension 2") {
  auto g = build_group("SU(2)");
  REQUIRE(g->rank() == 1);
  CHECK(g->generators()[0].name == "y1");
  CHECK(g->generators()[0].kind == VarKind::Polynomial);
  CHECK(g->generators()[0].rep_dimension == 2);
}

TEST_CASE("U(2) adds a Laurent determinant generator") {
  auto g = build_group("U(2)");
  REQUIRE(g->rank() == 2);
  CHECK(g->generators()[0].name == "y1");
  CHECK(g->generators()[0].rep_dimension == 2);
  CHECK(g->generators()[1].name == "t1");
  CHECK(g->generators()[1].kind == VarKind::Laurent);
}

TEST_CASE("bare torus of rank 2") {
  GroupDescriptor d;
  d.torus_rank = 2;
  auto g = build_group(d);
  REQUIRE(g->rank() == 2);
  for (const auto& gen : g->generators()) CHECK(gen.kind == VarKind::Laurent);
}

TEST_CASE("fundamental representations and their dimensions") {
  auto su3 = build_group("SU(3)");
  REQUIRE(su3->rank() == 2);
  CHECK(su3->generators()[0].rep_dimension == 3);
  CHECK(su3->generators()[1].rep_dimension == 3);
  auto sp2 = build_group("Sp(2)");
  CHECK(sp2->generators()[0].rep_dimension == 4);
  CHECK(sp2->generators()[1].rep_dimension == 5);  // C(4,2) - 1
  auto su4 = build_group("SU(4)");
  CHECK(su4->generators()[1].rep_dimension == 6);
  CHECK(build_group("trivial")->generators().empty());
}

TEST_CASE("products concatenate inventories with global numbering") {
  auto g = build_group("SU(2) x U(1)");
  REQUIRE(g->rank() == 2);
  CHECK(g->generators()[0].name == "y1");
  CHECK(g->generators()[1].name == "t1");
  auto h = build_group("SU(2) x SU(3) x T^1");
  REQUIRE(h->rank() == 4);
  CHECK(h->generators()[2].name == "y3");
  CHECK(h->generators()[3].name == "t1");
  CHECK(h->generator_index("y3") == 2);
  CHECK_THROWS_AS(h->generator_index("y9"), UnknownGenerator);
}

TEST_CASE("rank is additive over products") {
  const char* names[] = {"SU(2)", "SU(3)", "Sp(2)", "U(3)", "T^2", "U(1)"};
  for (const char* a : names)
    for (const char* b : names) {
      auto ga = build_group(a), gb = build_group(b);
      auto gab = build_group(std::string(a) + " x " + b);
      CHECK(gab->rank() == ga->rank() + gb->rank());
    }
}

TEST_CASE("descriptor text forms") {
  CHECK(to_string(parse_group_descriptor("su(3)*sp(2)*t^2")) == "SU(3) x Sp(2) x T^2");
  CHECK(to_string(parse_group_descriptor("T")) == "T^1");
  CHECK(parse_group_descriptor("1").trivial);
  auto j = parse_group_descriptor(R"j({"factors": ["SU(2)", {"type": "U", "n": 2}], "torus_rank": 1})j");
  CHECK(to_string(j) == "SU(2) x U(2) x T^1");
  CHECK(*build_group("SU(2) x T^1") == *build_group("su(2)*T"));
}

TEST_CASE("bad descriptors") {
  CHECK_THROWS_AS(parse_group_descriptor("SU(2) x"), ParseError);
  CHECK_THROWS_AS(parse_group_descriptor("SO(3)"), ParseError);
  CHECK_THROWS_AS(parse_group_descriptor("SU(1)"), InvalidDescriptor);
  CHECK_THROWS_AS(parse_group_descriptor("U(0)"), InvalidDescriptor);
  CHECK_THROWS_AS(parse_group_descriptor("SU(40)"), InvalidDescriptor);
  try {
    parse_group_descriptor("SU(2) + U(1)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("per-factor generator counts, n = 1..6") {
  for (int n = 1; n <= 6; ++n) {
    if (n >= 2) CHECK(build_group("SU(" + std::to_string(n) + ")")->rank() == static_cast<std::size_t>(n - 1));
    CHECK(build_group("Sp(" + std::to_string(n) + ")")->rank() == static_cast<std::size_t>(n));
    CHECK(build_group("U(" + std::to_string(n) + ")")->rank() == static_cast<std::size_t>(n));
    for (const auto& gen : build_group("Sp(" + std::to_string(n) + ")")->generators()) {
      const int k = gen.fundamental;
      CHECK(gen.rep_dimension == binomial(2 * n, k) - binomial(2 * n, k - 2));
    }
  }
}
