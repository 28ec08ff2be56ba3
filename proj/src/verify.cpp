#include "kconj/verify.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "kconj/characters.hpp"
#include "kconj/differentials.hpp"
#include "kconj/errors.hpp"
#include "kconj/homological.hpp"
#include "kconj/ktheory.hpp"
#include "kconj/linalg.hpp"
#include "kconj/parser.hpp"
#include "kconj/random.hpp"

namespace kconj {

namespace {

// Collects the first few counterexamples of a property sweep.
class Tally {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(what);
  }
  void pass() { ++passes_; }
  void expect(bool ok, const std::string& what) { ok ? pass() : fail(what); }

  CheckResult result(std::string detail_prefix = {}) const {
    CheckResult r;
    r.passed = failures_ == 0;
    std::ostringstream os;
    if (!detail_prefix.empty()) os << detail_prefix << "; ";
    os << passes_ << " passed, " << failures_ << " failed";
    for (const auto& e : examples_) os << "; " << e;
    r.detail = os.str();
    r.data = {{"passed", passes_}, {"failed", failures_}};
    return r;
  }

 private:
  std::size_t passes_ = 0, failures_ = 0;
  std::vector<std::string> examples_;
};

std::mt19937_64 rng_for(const VerifyConfig& c, std::uint64_t salt) { return std::mt19937_64(c.seed * 0x9E3779B97F4A7C15ULL + salt); }

RandomElementShape small_shape(const GroupModel& g) {
  RandomElementShape s;
  if (g.rank() > 4) {
    s.max_terms = 2;
    s.max_poly_exponent = 1;
    s.max_laurent_exponent = 1;
  }
  return s;
}

std::vector<int> window_degrees(const GroupModel& g, const VerifyConfig& c) {
  std::vector<int> out;
  if (c.degree) {
    if (*c.degree >= 0 && static_cast<std::size_t>(*c.degree) <= g.rank()) out.push_back(*c.degree);
    return out;
  }
  for (std::size_t k = 0; k <= g.rank(); ++k) out.push_back(static_cast<int>(k));
  return out;
}

CheckResult window_exactness(const FreeComplex& complex, const GroupModel& g, const VerifyConfig& c) {
  Tally t;
  nlohmann::json reports = nlohmann::json::array();
  WindowOptions opts;
  opts.threads = c.threads;
  const ExponentWindow w = ExponentWindow::uniform(*complex.ring(), c.window, c.padding);
  for (int k : window_degrees(g, c)) {
    HomologyReport r = window_homology(complex, w, k, opts);
    reports.push_back(r.to_json());
    t.expect(r.deficit == 0 && r.torsion.empty(),
             "degree " + std::to_string(k) + ": deficit " + std::to_string(r.deficit));
  }
  CheckResult res = t.result("window bound " + std::to_string(c.window));
  res.data["reports"] = reports;
  return res;
}

std::vector<InvariantCheck> make_registry() {
  std::vector<InvariantCheck> reg;
  auto add = [&](std::string name, std::string module, std::string description,
                 std::function<CheckResult(const GroupPtr&, const VerifyConfig&)> run) {
    reg.push_back({std::move(name), std::move(module), std::move(description), std::move(run)});
  };

  // group_model
  add("group.inventory_counts", "group_model", "generator names unique; per-factor counts; sweep n = 1..6",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        std::set<std::string> names;
        std::size_t poly = 0, laurent = 0;
        for (const auto& gen : g->generators()) {
          t.expect(names.insert(gen.name).second, "duplicate name " + gen.name);
          (gen.kind == VarKind::Polynomial ? poly : laurent)++;
        }
        std::size_t want_poly = 0, want_laurent = static_cast<std::size_t>(g->descriptor().torus_rank);
        for (const auto& f : g->descriptor().factors) {
          if (f.type == FactorType::SU) want_poly += static_cast<std::size_t>(f.n - 1);
          if (f.type == FactorType::Sp) want_poly += static_cast<std::size_t>(f.n);
          if (f.type == FactorType::U) {
            want_poly += static_cast<std::size_t>(f.n - 1);
            ++want_laurent;
          }
        }
        t.expect(poly == want_poly && laurent == want_laurent, "counts differ from factor formulas");
        t.expect(g->rank() == poly + laurent, "rank != generator count");
        for (int n = 1; n <= 6; ++n) {
          if (n >= 2) t.expect(build_group("SU(" + std::to_string(n) + ")")->rank() == static_cast<std::size_t>(n - 1), "SU sweep");
          t.expect(build_group("Sp(" + std::to_string(n) + ")")->rank() == static_cast<std::size_t>(n), "Sp sweep");
          auto u = build_group("U(" + std::to_string(n) + ")");
          t.expect(u->rank() == static_cast<std::size_t>(n) && u->generators().back().kind == VarKind::Laurent, "U sweep");
          t.expect(build_group("T^" + std::to_string(n))->rank() == static_cast<std::size_t>(n), "torus sweep");
        }
        return t.result();
      });
  add("group.rank_additivity", "group_model", "rank(G1 x G2) = rank(G1) + rank(G2)",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        for (const char* other : {"SU(2)", "Sp(2)", "U(3)", "T^2"}) {
          auto h = build_group(other);
          if (g->descriptor().trivial) {
            t.pass();
            continue;
          }
          GroupDescriptor d = g->descriptor();
          d.factors.insert(d.factors.end(), h->descriptor().factors.begin(), h->descriptor().factors.end());
          d.torus_rank += h->descriptor().torus_rank;
          if (static_cast<long>(g->rank() + h->rank()) > kMaxRank) continue;
          t.expect(build_group(d)->rank() == g->rank() + h->rank(), std::string("with ") + other);
        }
        return t.result();
      });

  // rep_ring
  add("rep_ring.augmentation_homomorphism", "rep_ring", "ε(ab) = ε(a)ε(b), ε(a+b) = ε(a)+ε(b)",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 1);
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, small_shape(*g));
          RingElement b = random_ring_element(g->ring(), rng, small_shape(*g));
          t.expect((a * b).augmentation() == a.augmentation() * b.augmentation(), "product law at " + a.to_string());
          t.expect((a + b).augmentation() == a.augmentation() + b.augmentation(), "sum law at " + a.to_string());
        }
        return t.result();
      });
  add("rep_ring.indecomposable_derivation", "rep_ring", "coords additive and coords(ab) = ε(a)coords(b) + ε(b)coords(a)",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 2);
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, small_shape(*g));
          RingElement b = random_ring_element(g->ring(), rng, small_shape(*g));
          auto va = indecomposable_coordinates(a), vb = indecomposable_coordinates(b);
          auto vab = indecomposable_coordinates(a * b), vsum = indecomposable_coordinates(a + b);
          bool ok = vab.constant_part == va.constant_part * vb.constant_part;
          for (std::size_t k = 0; k < g->rank(); ++k) {
            ok = ok && vab.coords[k] == va.constant_part * vb.coords[k] + vb.constant_part * va.coords[k];
            ok = ok && vsum.coords[k] == va.coords[k] + vb.coords[k];
          }
          t.expect(ok, "a = " + a.to_string() + ", b = " + b.to_string());
        }
        return t.result();
      });
  add("rep_ring.print_parse_roundtrip", "rep_ring", "parse(print(a)) = a",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 3);
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng);
          t.expect(parse_ring_element(a.to_string(), g->ring()) == a, a.to_string());
          RingElement b = random_ring_element(g->doubled_ring(), rng);
          t.expect(parse_ring_element(b.to_string(), g->doubled_ring()) == b, b.to_string());
        }
        return t.result();
      });
  add("rep_ring.exponent_sign", "rep_ring", "no negative exponent on polynomial generators after operation chains",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 4);
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, small_shape(*g));
          RingElement chain = a * random_ring_element(g->ring(), rng, small_shape(*g)) - a;
          for (std::size_t v = 0; v < g->rank(); ++v) chain += chain.derivative(v);
          bool ok = true;
          for (const auto& [e, coeff] : chain.terms())
            for (std::size_t v = 0; v < e.size(); ++v)
              if (g->ring()->kind(v) == VarKind::Polynomial && e[v] < 0) ok = false;
          t.expect(ok, chain.to_string());
        }
        return t.result();
      });

  // characters
  add("characters.roundtrip", "characters", "from_character(to_character(a)) = a",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 5);
        RandomElementShape shape = small_shape(*g);
        shape.max_terms = 3;
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, shape);
          try {
            t.expect(from_character(to_character(a, *g), *g) == a, a.to_string());
          } catch (const NotInImage& e) {
            t.fail(std::string("NotInImage raised: ") + e.what());
          }
        }
        return t.result();
      });
  add("characters.ring_homomorphism", "characters", "χ(ab) = χ(a)χ(b), χ(a+b) = χ(a)+χ(b)",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 6);
        RandomElementShape shape = small_shape(*g);
        shape.max_terms = 2;
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, shape);
          RingElement b = random_ring_element(g->ring(), rng, shape);
          auto ca = to_character(a, *g), cb = to_character(b, *g);
          t.expect(to_character(a * b, *g) == ca * cb, "product at " + a.to_string());
          t.expect(to_character(a + b, *g) == ca + cb, "sum at " + a.to_string());
        }
        return t.result();
      });
  add("characters.identity_evaluation", "characters", "χ(a)(1) = ε(a)",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 7);
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, small_shape(*g));
          t.expect(to_character(a, *g).eval_at_identity() == a.augmentation(), a.to_string());
        }
        for (const auto& gen : g->generators())
          t.expect(fundamental_character(*g, gen).eval_at_identity() == gen.rep_dimension, "dim of " + gen.name);
        return t.result();
      });
  add("characters.weyl_invariance", "characters", "characters, their sums and products are Weyl-invariant",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 8);
        for (const auto& gen : g->generators())
          t.expect(fundamental_character(*g, gen).is_weyl_invariant(), "fundamental " + gen.name);
        for (int i = 0; i < c.samples; ++i) {
          auto a = to_character(random_ring_element(g->ring(), rng, small_shape(*g)), *g);
          auto b = to_character(random_ring_element(g->ring(), rng, small_shape(*g)), *g);
          t.expect(a.is_weyl_invariant() && (a * b).is_weyl_invariant() && (a + b).is_weyl_invariant(),
                   a.to_string());
        }
        return t.result();
      });

  // homological
  add("homological.koszul_square_zero", "homological", "d∘d = 0 and μ∘d_1 = 0 for the Koszul resolution",
      [](const GroupPtr& g, const VerifyConfig&) {
        auto rep = differential_squared_is_zero(build_koszul_resolution(*g));
        Tally t;
        t.expect(rep.ok, rep.nonzero.empty() ? "" : rep.nonzero.front());
        auto r = t.result(std::to_string(rep.compositions_checked) + " composite entries");
        r.data["report"] = rep.to_json();
        return r;
      });
  add("homological.augmentation_square_zero", "homological", "d∘d = 0 and ε∘d_1 = 0 for ΛP⊗RG",
      [](const GroupPtr& g, const VerifyConfig&) {
        auto rep = differential_squared_is_zero(build_augmentation_resolution(*g));
        Tally t;
        t.expect(rep.ok, rep.nonzero.empty() ? "" : rep.nonzero.front());
        auto r = t.result(std::to_string(rep.compositions_checked) + " composite entries");
        r.data["report"] = rep.to_json();
        return r;
      });
  add("homological.koszul_window_exactness", "homological", "deficit 0 on the exponent window, Koszul resolution",
      [](const GroupPtr& g, const VerifyConfig& c) { return window_exactness(build_koszul_resolution(*g), *g, c); });
  add("homological.augmentation_window_exactness", "homological", "deficit 0 on the exponent window, ΛP⊗RG",
      [](const GroupPtr& g, const VerifyConfig& c) {
        return window_exactness(build_augmentation_resolution(*g), *g, c);
      });
  add("homological.window_monotonicity", "homological", "zero deficit persists when the inner window grows",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        const FreeComplex complex =
            g->rank() <= 2 ? build_koszul_resolution(*g) : build_augmentation_resolution(*g);
        WindowOptions opts;
        opts.compute_torsion = false;
        opts.threads = c.threads;
        const int k = std::min<int>(1, static_cast<int>(g->rank()));
        long previous = 0;
        for (int bound = 0; bound <= std::max(1, c.window); ++bound) {
          auto r = window_homology(complex, ExponentWindow::uniform(*complex.ring(), bound, c.padding), k, opts);
          t.expect(!(previous == 0 && r.deficit != 0), "bound " + std::to_string(bound));
          previous = r.deficit;
        }
        return t.result(complex.name() + " degree " + std::to_string(k));
      });
  add("homological.tor_ranks", "homological", "Tor ranks are the binomial row C(r,k), cross-checked on windows",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        TorTable tor = tor_ranks(*g);
        for (std::size_t k = 0; k <= g->rank(); ++k) {
          long want = binomial(static_cast<int>(g->rank()), static_cast<int>(k));
          t.expect(tor.bimodule[k] == want && tor.augmentation[k] == want, "degree -" + std::to_string(k));
        }
        t.expect(tor.cross_checked, tor.mismatches.empty() ? "" : tor.mismatches.front());
        auto r = t.result();
        r.data["tor"] = tor.to_json();
        return r;
      });
  add("homological.tensored_down_zero_differential", "homological",
      "tensored-down complexes have zero differential and full windowed homology",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        WindowOptions opts;
        opts.compute_torsion = false;
        opts.threads = c.threads;
        const FreeComplex bimod = tensor_down(build_koszul_resolution(*g), multiplication_map(*g));
        const FreeComplex aug = tensor_down(build_augmentation_resolution(*g), augmentation_map(*g));
        for (std::size_t k = 0; k <= g->rank() && k <= 3; ++k) {
          const int bound = g->rank() <= 3 ? 1 : 0;
          auto w = ExponentWindow::uniform(*bimod.ring(), bound, 1);
          auto r = window_homology(bimod, w, static_cast<int>(k), opts);
          t.expect(r.deficit == static_cast<long>(w.monomial_count() * bimod.basis(k).size()),
                   "RG degree " + std::to_string(k));
          auto z = window_homology(aug, ExponentWindow::uniform(*aug.ring(), 0, 1), static_cast<int>(k), opts);
          t.expect(z.deficit == static_cast<long>(aug.basis(k).size()), "Z degree " + std::to_string(k));
        }
        return t.result();
      });
  add("homological.snf_validity", "homological", "U·m·V = D diagonal with divisibility, U and V unimodular",
      [](const GroupPtr&, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 9);
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        for (int i = 0; i < std::min(c.samples, 40); ++i) {
          IntMatrix m = random_int_matrix(dim(rng), dim(rng), 50, rng);
          SmithForm s = smith_normal_form(m);
          bool ok = s.u * m * s.v == s.d && s.d.is_diagonal();
          ok = ok && abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1;
          auto f = s.invariant_factors();
          for (std::size_t k = 0; k + 1 < f.size(); ++k) ok = ok && f[k] > 0 && f[k + 1] % f[k] == 0;
          t.expect(ok, m.to_string());
        }
        return t.result();
      });
  add("homological.regular_sequence", "homological", "γ(z)' - γ(z) rewrites to a coordinate or unit·(s - 1)",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        for (const auto& step : regular_sequence_certificate(*g)) t.expect(step.verified, step.rewrite);
        return t.result();
      });

  // ktheory
  add("ktheory.graded_commutativity", "ktheory", "ab = (-1)^{|a||b|} ba on homogeneous classes",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 10);
        std::uniform_int_distribution<int> deg(0, static_cast<int>(g->rank()));
        for (int i = 0; i < c.samples; ++i) {
          KClass a = random_homogeneous_kclass(g, deg(rng), rng, small_shape(*g));
          KClass b = random_homogeneous_kclass(g, deg(rng), rng, small_shape(*g));
          const int sign = (*a.degree() * *b.degree()) % 2 ? -1 : 1;
          KClass ba = k_mul(b, a);
          t.expect(k_mul(a, b) == (sign > 0 ? ba : -ba), a.to_string() + " · " + b.to_string());
        }
        return t.result();
      });
  add("ktheory.square_zero", "ktheory", "degree-1 generators square to 0 and anticommute",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 11);
        for (std::size_t i = 0; i < g->rank(); ++i) {
          KClass zi = KClass::generator(g, i);
          t.expect(k_mul(zi, zi).is_zero(), "square of " + zi.to_string());
          for (std::size_t j = 0; j < g->rank(); ++j) {
            KClass zj = KClass::generator(g, j);
            t.expect(k_mul(zi, zj) == -k_mul(zj, zi), zi.to_string() + "," + zj.to_string());
          }
        }
        if (g->rank() > 0)
          for (int i = 0; i < c.samples; ++i) {
            KClass a = random_homogeneous_kclass(g, 1, rng, small_shape(*g));
            t.expect(k_mul(a, a).is_zero(), "odd class squared: " + a.to_string());
          }
        return t.result();
      });
  add("ktheory.leibniz_beta", "ktheory", "β^Ad(ρσ) = ρβ^Ad(σ) + σβ^Ad(ρ)",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 12);
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, small_shape(*g));
          RingElement b = random_ring_element(g->ring(), rng, small_shape(*g));
          t.expect(beta_ad(a * b, g) == a * beta_ad(b, g) + b * beta_ad(a, g), a.to_string() + " ; " + b.to_string());
        }
        return t.result();
      });
  add("ktheory.forgetful_compatibility", "ktheory", "f(β^Ad(ρ)) has the indecomposable coordinates of ρ",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 13);
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, small_shape(*g));
          IntegralClass f = forgetful(beta_ad(a, g));
          auto v = indecomposable_coordinates(a);
          bool ok = true;
          for (std::size_t k = 0; k < g->rank(); ++k) ok = ok && f.coefficient(ExteriorIndex::single(k)) == v.coords[k];
          t.expect(ok, a.to_string());
        }
        return t.result();
      });
  add("ktheory.forgetful_ring_map", "ktheory", "f(ab) = f(a)f(b)",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 14);
        std::uniform_int_distribution<int> deg(0, static_cast<int>(g->rank()));
        for (int i = 0; i < c.samples; ++i) {
          KClass a = random_homogeneous_kclass(g, deg(rng), rng, small_shape(*g));
          KClass b = random_homogeneous_kclass(g, deg(rng), rng, small_shape(*g));
          t.expect(forgetful(k_mul(a, b)) == forgetful(a) * forgetful(b), a.to_string());
        }
        return t.result();
      });
  add("ktheory.forgetful_surjective", "ktheory", "every e_S is f of a structure-isomorphism image",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        const std::size_t r = std::min<std::size_t>(g->rank(), 10);
        for (std::size_t k = 0; k <= r; ++k)
          for (ExteriorIndex s : exterior_basis(r, k)) {
            auto img = forgetful(structure_isomorphism(RingElement::constant(g->ring(), 1), s.elements(), g));
            IntegralClass want(g);
            want.add_component(s, 1);
            t.expect(img == want, exterior_name<KTag>(*g, s));
          }
        return t.result();
      });
  add("ktheory.basis_claim", "ktheory", "matrix of f(β^Ad(ρ)), ρ ∈ Q, is the identity",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        for (std::size_t i = 0; i < g->rank(); ++i) {
          IntegralClass f = forgetful(beta_ad(q_generator_class(*g, i), g));
          for (std::size_t j = 0; j < g->rank(); ++j)
            t.expect(f.coefficient(ExteriorIndex::single(j)) == (i == j ? 1 : 0),
                     "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        return t.result();
      });
  add("ktheory.structure_isomorphism_unimodular", "ktheory", "σ=1 images of subsets of Q are unit multiples of e_S",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        const std::size_t r = std::min<std::size_t>(g->rank(), 10);
        for (std::size_t k = 0; k <= r; ++k)
          for (ExteriorIndex s : exterior_basis(r, k)) {
            KClass img = structure_isomorphism(RingElement::constant(g->ring(), 1), s.elements(), g);
            const RingElement c = img.coefficient(s);
            bool ok = img.components().size() == 1 && c.is_constant() && abs(c.constant_term()) == 1;
            t.expect(ok, exterior_name<KTag>(*g, s) + " -> " + img.to_string());
          }
        return t.result();
      });
  add("ktheory.poincare_ranks", "ktheory", "K^0, K^1 have rank 2^{r-1} over RG (1, 0 for trivial G)",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        PoincareRanks p = poincare_ranks(*g);
        const long half = g->rank() == 0 ? 0 : 1L << (g->rank() - 1);
        if (g->rank() == 0)
          t.expect(p.k0 == 1 && p.k1 == 0, "trivial group ranks");
        else
          t.expect(p.k0 == half && p.k1 == half, "ranks " + std::to_string(p.k0) + "," + std::to_string(p.k1));
        return t.result();
      });

  // differentials
  add("differentials.derivation", "differentials", "d(ab) = a db + b da, d(1) = 0",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 15);
        t.expect(d(RingElement::constant(g->ring(), 1), g).is_zero(), "d(1)");
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, small_shape(*g));
          RingElement b = random_ring_element(g->ring(), rng, small_shape(*g));
          t.expect(d(a * b, g) == a * d(b, g) + b * d(a, g), a.to_string() + " ; " + b.to_string());
        }
        return t.result();
      });
  add("differentials.phi_d_equals_beta", "differentials", "φ(dρ) = β^Ad(ρ)",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 16);
        for (int i = 0; i < c.samples; ++i) {
          RingElement a = random_ring_element(g->ring(), rng, small_shape(*g));
          t.expect(phi(d(a, g)) == beta_ad(a, g), a.to_string());
        }
        return t.result();
      });
  add("differentials.phi_ring_map", "differentials", "φ(α∧β) = φ(α)φ(β); φ bijective on basis",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 17);
        std::uniform_int_distribution<int> deg(0, static_cast<int>(g->rank()));
        for (int i = 0; i < c.samples; ++i) {
          DiffForm a = random_homogeneous_kclass(g, deg(rng), rng, small_shape(*g)).retag<DiffTag>();
          DiffForm b = random_homogeneous_kclass(g, deg(rng), rng, small_shape(*g)).retag<DiffTag>();
          t.expect(phi(wedge(a, b)) == k_mul(phi(a), phi(b)), a.to_string());
        }
        const std::size_t r = std::min<std::size_t>(g->rank(), 10);
        std::set<std::uint64_t> images;
        for (std::size_t k = 0; k <= r; ++k)
          for (ExteriorIndex s : exterior_basis(r, k)) {
            KClass img = phi(DiffForm::basis(g, s));
            t.expect(img == KClass::basis(g, s), "basis " + exterior_name<DiffTag>(*g, s));
            images.insert(img.components().begin()->first.bits);
          }
        t.expect(images.size() == (std::size_t{1} << r), "basis images not distinct");
        return t.result();
      });
  add("differentials.f_phi_basis", "differentials", "f∘φ sends {dρ : ρ ∈ Q} to the identity matrix",
      [](const GroupPtr& g, const VerifyConfig&) {
        Tally t;
        for (std::size_t i = 0; i < g->rank(); ++i) {
          IntegralClass f = forgetful(phi(d(q_generator_class(*g, i), g)));
          for (std::size_t j = 0; j < g->rank(); ++j)
            t.expect(f.coefficient(ExteriorIndex::single(j)) == (i == j ? 1 : 0),
                     "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        return t.result();
      });

  // cli
  add("cli.print_parse_roundtrip", "cli", "printed K-classes, forms and characters re-parse to equal values",
      [](const GroupPtr& g, const VerifyConfig& c) {
        Tally t;
        auto rng = rng_for(c, 18);
        std::uniform_int_distribution<int> deg(0, static_cast<int>(g->rank()));
        auto torus = torus_model(*g);
        for (int i = 0; i < c.samples; ++i) {
          KClass a = random_homogeneous_kclass(g, deg(rng), rng) + random_homogeneous_kclass(g, deg(rng), rng);
          t.expect(parse_kclass(a.to_string(), g) == a, a.to_string());
          DiffForm w = a.retag<DiffTag>();
          t.expect(parse_diff_form(w.to_string(), g) == w, w.to_string());
          auto ch = to_character(random_ring_element(g->ring(), rng, small_shape(*g)), *g);
          t.expect(parse_character(ch.to_string(), torus) == ch, ch.to_string());
        }
        return t.result();
      });
  return reg;
}

}  // namespace

const std::vector<InvariantCheck>& invariant_registry() {
  static const std::vector<InvariantCheck> registry = make_registry();
  return registry;
}

bool VerifyReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results)
    if (!r.passed) out.push_back(r.name);
  return out;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results)
    checks.push_back({{"name", r.name},
                      {"module", r.module},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"seconds", r.seconds},
                      {"data", r.data}});
  return {{"group", group}, {"passed", passed()}, {"failed", failures()}, {"checks", checks}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "verify " << group << "\n";
  for (const auto& r : results) os << (r.passed ? "  PASS " : "  FAIL ") << r.name << ": " << r.detail << "\n";
  os << (passed() ? "all invariants hold" : "FAILED: " + std::to_string(failures().size()) + " invariant(s)") << "\n";
  return os.str();
}

VerifyReport run_verify(const GroupPtr& g, const VerifyConfig& config) {
  const auto& registry = invariant_registry();
  VerifyReport report;
  report.group = g->name();
  report.results.resize(registry.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= registry.size()) break;
      const auto& check = registry[i];
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = check.run(g, config);
      } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.name = check.name;
      r.module = check.module;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      report.results[i] = std::move(r);
    }
  };
  const unsigned threads = std::max(1U, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

}  // namespace kconj
