// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kconj/characters.hpp"
#include "kconj/differentials.hpp"
#include "kconj/homological.hpp"
#include "kconj/ktheory.hpp"
#include "kconj/linalg.hpp"
#include "kconj/random.hpp"
#include "snf_oracle.hpp"

using namespace kconj;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<std::string> kGroups = {"U(1)",  "T^2",   "T^3",   "SU(2)", "SU(3)",        "SU(4)",
                                          "Sp(1)", "Sp(2)", "U(2)",  "U(3)",  "SU(2) x U(1)", "SU(2) x SU(3) x T^1"};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message, if any.
struct Ledger {
  bool ok = true;
  std::string first;
  std::size_t checks = 0;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) first = what;
    ok = ok && cond;
  }
};

Outcome presentation_ranks() {
  Ledger l;
  double worst = 0;
  for (const auto& name : kGroups) {
    auto start = Clock::now();
    auto g = build_group(name);
    auto j = present(*g).to_json();
    const double t = since(start);
    worst = std::max(worst, t);
    const std::size_t r = g->rank();
    const long half = 1L << (r - 1);
    l.expect(j["generators"].size() == r, name + ": generator count");
    l.expect(j["ranks"]["K0"] == half && j["ranks"]["K1"] == half, name + ": ranks");
    l.expect(j["K0_basis"].size() == static_cast<std::size_t>(half) &&
                 j["K1_basis"].size() == static_cast<std::size_t>(half),
             name + ": basis sizes");
    l.expect(t < 1.0, name + ": slower than 1 s");
  }
  std::ostringstream os;
  os << kGroups.size() << " groups, slowest " << worst << " s";
  return {l.ok, l.ok ? os.str() : l.first};
}

SquareZeroReport square_zero_all(const std::function<FreeComplex(const FreeComplex&)>& tamper, const GroupModel& g,
                                 bool koszul) {
  FreeComplex c = koszul ? build_koszul_resolution(g) : build_augmentation_resolution(g);
  return differential_squared_is_zero(tamper(c));
}

Outcome resolution_validity() {
  auto start = Clock::now();
  Ledger l;
  std::size_t entries = 0;
  auto same = [](const FreeComplex& c) { return c; };
  for (const auto& name : kGroups) {
    auto g = build_group(name);
    for (bool koszul : {true, false}) {
      auto rep = square_zero_all(same, *g, koszul);
      entries += rep.compositions_checked;
      l.expect(rep.ok, name + (koszul ? ": Koszul" : ": augmentation") + " d² != 0");
    }
  }
  const double t = since(start);
  l.expect(t < 10.0, "slower than 10 s");
  std::ostringstream os;
  os << entries << " composite entries, " << t << " s";
  return {l.ok, l.ok ? os.str() : l.first};
}

Outcome windowed_exactness() {
  auto start = Clock::now();
  Ledger l;
  std::size_t groups = 0, cells = 0;
  WindowOptions opts;
  for (const auto& name : kGroups) {
    auto g = build_group(name);
    if (g->rank() > 3) continue;
    ++groups;
    FreeComplex c = build_koszul_resolution(*g);
    auto w = ExponentWindow::uniform(*c.ring(), 3, 1);
    for (std::size_t k = 1; k <= g->rank(); ++k) {
      auto r = window_homology(c, w, static_cast<int>(k), opts);
      cells += r.cells;
      l.expect(r.deficit == 0 && r.torsion.empty(),
               name + ": degree -" + std::to_string(k) + " deficit " + std::to_string(r.deficit));
    }
  }
  const double t = since(start);
  l.expect(t < 120.0, "slower than 2 min");
  std::ostringstream os;
  os << groups << " groups of rank <= 3, " << cells << " windowed cells, " << t << " s";
  return {l.ok, l.ok ? os.str() : l.first};
}

Outcome forgetful_reduction() {
  Ledger l;
  std::mt19937_64 rng(404);
  for (const auto& name : kGroups) {
    auto g = build_group(name);
    for (int i = 0; i < 200; ++i) {
      RingElement a = random_ring_element(g->ring(), rng);
      IntegralClass f = forgetful(beta_ad(a, g));
      auto v = indecomposable_coordinates(a);
      bool eq = f.components().size() <= g->rank();
      for (std::size_t j = 0; j < g->rank(); ++j) eq = eq && f.coefficient(ExteriorIndex::single(j)) == v.coords[j];
      l.expect(eq, name + ": " + a.to_string());
    }
  }
  return {l.ok, l.ok ? std::to_string(l.checks) + " random elements" : l.first};
}

Outcome basis_claim() {
  Ledger l;
  for (const auto& name : kGroups) {
    auto g = build_group(name);
    for (std::size_t i = 0; i < g->rank(); ++i) {
      IntegralClass f = forgetful(phi(d(q_generator_class(*g, i), g)));
      l.expect(f.components().size() == 1, name + ": row " + std::to_string(i) + " has extra components");
      for (std::size_t j = 0; j < g->rank(); ++j)
        l.expect(f.coefficient(ExteriorIndex::single(j)) == (i == j ? 1 : 0),
                 name + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return {l.ok, l.ok ? std::to_string(l.checks) + " matrix entries" : l.first};
}

Outcome leibniz_suite() {
  Ledger l;
  std::mt19937_64 rng(606);
  std::size_t pairs = 0;
  for (int i = 0; i < 500; ++i) {
    auto g = build_group(kGroups[static_cast<std::size_t>(i) % kGroups.size()]);
    RingElement a = random_ring_element(g->ring(), rng), b = random_ring_element(g->ring(), rng);
    l.expect(d(a * b, g) == a * d(b, g) + b * d(a, g), "d: " + a.to_string() + " ; " + b.to_string());
    l.expect(beta_ad(a * b, g) == a * beta_ad(b, g) + b * beta_ad(a, g), "beta: " + a.to_string());
    ++pairs;
  }
  return {l.ok, l.ok ? std::to_string(pairs) + " random pairs" : l.first};
}

Outcome character_roundtrip() {
  auto start = Clock::now();
  Ledger l;
  std::mt19937_64 rng(707);
  std::vector<std::string> groups;
  for (int n = 1; n <= 4; ++n) {
    if (n >= 2) groups.push_back("SU(" + std::to_string(n) + ")");
    groups.push_back("Sp(" + std::to_string(n) + ")");
    groups.push_back("U(" + std::to_string(n) + ")");
    groups.push_back("T^" + std::to_string(n));
  }
  for (const auto& name : groups) {
    auto g = build_group(name);
    for (int i = 0; i < 100; ++i) {
      RingElement a = random_ring_element(g->ring(), rng);
      l.expect(from_character(to_character(a, *g), *g) == a, name + ": " + a.to_string());
    }
  }
  const double t = since(start);
  l.expect(t < 60.0, "slower than 1 min");
  std::ostringstream os;
  os << groups.size() << " groups x 100 elements, " << t << " s";
  return {l.ok, l.ok ? os.str() : l.first};
}

Outcome snf_oracle() {
  Ledger l;
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int i = 0; i < 200; ++i) {
    IntMatrix m = random_int_matrix(dim(rng), dim(rng), 50, rng);
    // A third of the samples get dependent rows to exercise rank deficiency.
    if (i % 3 == 0 && m.rows() > 2)
      for (std::size_t c = 0; c < m.cols(); ++c) m(m.rows() - 1, c) = 3 * m(0, c) - 2 * m(1, c);
    SmithForm s = smith_normal_form(m);
    oracle::Dense dense(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) dense[r][c] = m(r, c);
    l.expect(s.u * m * s.v == s.d && s.d.is_diagonal(), "U m V != D for " + m.to_string());
    l.expect(s.invariant_factors() == oracle::invariant_factors(dense), "factors differ for " + m.to_string());
  }
  return {l.ok, l.ok ? "200 random matrices up to 12x12" : l.first};
}

Outcome sign_conventions() {
  Ledger l;
  std::mt19937_64 rng(909);
  for (int i = 0; i < 500; ++i) {
    auto g = build_group(kGroups[static_cast<std::size_t>(i) % kGroups.size()]);
    std::uniform_int_distribution<int> deg(0, static_cast<int>(g->rank()));
    KClass a = random_homogeneous_kclass(g, deg(rng), rng), b = random_homogeneous_kclass(g, deg(rng), rng);
    KClass ba = k_mul(b, a);
    l.expect(k_mul(a, b) == ((*a.degree() * *b.degree()) % 2 ? -ba : ba), "commutativity: " + a.to_string());
    const std::size_t gi = static_cast<std::size_t>(i) % g->rank();
    KClass z = KClass::generator(g, gi);
    l.expect(k_mul(z, z).is_zero(), "square of " + z.to_string());
    if (*a.degree() % 2) l.expect(k_mul(a, a).is_zero(), "odd square: " + a.to_string());
  }
  return {l.ok, l.ok ? "500 random homogeneous products" : l.first};
}

Outcome negative_control() {
  Ledger l;
  std::size_t caught = 0, tried = 0;
  auto corrupt = [](const FreeComplex& c) { return corrupt_sign_fixture(c); };
  for (const auto& name : kGroups) {
    auto g = build_group(name);
    if (g->rank() < 2) continue;  // a single sign in d_1 alone cannot break d² = 0
    ++tried;
    auto rep = square_zero_all(corrupt, *g, true);
    if (!rep.ok) ++caught;
    l.expect(!rep.ok, name + ": corrupted Koszul differential passed the d² check");
  }
  std::ostringstream os;
  os << "corruption detected in " << caught << "/" << tried << " groups";
  return {l.ok, l.ok ? os.str() : l.first};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "presentation: generators and free ranks", presentation_ranks},
      {2, "resolution validity (d² = 0)", resolution_validity},
      {3, "windowed exactness, bound 3 padding 1", windowed_exactness},
      {4, "forgetful map equals indecomposable coordinates", forgetful_reduction},
      {5, "basis claim: f∘phi∘d on generators is the identity", basis_claim},
      {6, "Leibniz rules for d and beta", leibniz_suite},
      {7, "character round-trip", character_roundtrip},
      {8, "Smith form against reference oracle", snf_oracle},
      {9, "sign conventions", sign_conventions},
      {10, "negative control detects corrupted sign", negative_control},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s [%s] (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                since(start));
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
