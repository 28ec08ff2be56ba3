#include "kconj/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "kconj/errors.hpp"
#include "kconj/parser.hpp"

namespace kconj {

TorusModel::TorusModel(const GroupModel& g) : group_name_(g.name()) {
  std::vector<Variable> vars;
  const auto& desc = g.descriptor();
  auto add_block = [&](BlockKind kind, int n, std::size_t fi, std::size_t width) {
    blocks_.push_back({kind, n, fi, vars.size(), width});
    for (std::size_t k = 1; k <= width; ++k)
      vars.push_back({"x" + std::to_string(fi + 1) + "_" + std::to_string(k), VarKind::Laurent});
  };
  for (std::size_t fi = 0; fi < desc.factors.size(); ++fi) {
    const Factor& f = desc.factors[fi];
    const auto n = static_cast<std::size_t>(f.n);
    switch (f.type) {
      case FactorType::SU: add_block(BlockKind::SU, f.n, fi, n - 1); break;
      case FactorType::Sp: add_block(BlockKind::Sp, f.n, fi, n); break;
      case FactorType::U: add_block(BlockKind::U, f.n, fi, n); break;
    }
  }
  if (desc.torus_rank > 0)
    add_block(BlockKind::Circle, desc.torus_rank, desc.factors.size(),
              static_cast<std::size_t>(desc.torus_rank));
  ring_ = std::make_shared<const RingModel>("T(" + group_name_ + ")", std::move(vars));
}

TorusModelPtr torus_model(const GroupModel& g) { return std::make_shared<const TorusModel>(g); }

SymmetricLaurent::SymmetricLaurent(TorusModelPtr torus, RingElement poly)
    : torus_(std::move(torus)), poly_(std::move(poly)) {
  if (!(*poly_.ring() == *torus_->ring()))
    throw RingMismatch("character polynomial is not over " + torus_->ring()->id());
}

namespace {

// Simple reflections of one block acting on stored exponent vectors.
std::vector<std::function<void(Exponents&)>> weyl_generators(const TorusBlock& b) {
  std::vector<std::function<void(Exponents&)>> gens;
  const std::size_t o = b.offset, w = b.width;
  switch (b.kind) {
    case BlockKind::Circle:
      break;
    case BlockKind::U:
    case BlockKind::Sp:
      for (std::size_t i = 0; i + 1 < w; ++i)
        gens.push_back([o, i](Exponents& e) { std::swap(e[o + i], e[o + i + 1]); });
      if (b.kind == BlockKind::Sp)
        gens.push_back([o, w](Exponents& e) { e[o + w - 1] = -e[o + w - 1]; });
      break;
    case BlockKind::SU:
      for (std::size_t i = 0; i + 1 < w; ++i)
        gens.push_back([o, i](Exponents& e) { std::swap(e[o + i], e[o + i + 1]); });
      // Swapping x_{n-1} with the eliminated x_n: lift to (w, 0), swap the
      // last two slots, renormalize so the last slot is 0 again.
      gens.push_back([o, w](Exponents& e) {
        const int last = e[o + w - 1];
        for (std::size_t i = 0; i + 1 < w; ++i) e[o + i] -= last;
        e[o + w - 1] = -last;
      });
      break;
  }
  return gens;
}

}  // namespace

bool SymmetricLaurent::is_weyl_invariant() const {
  for (const auto& block : torus_->blocks()) {
    for (const auto& g : weyl_generators(block)) {
      for (const auto& [e, c] : poly_.terms()) {
        Exponents image = e;
        g(image);
        auto it = poly_.terms().find(image);
        if (it == poly_.terms().end() || it->second != c) return false;
      }
    }
  }
  return true;
}

mpz_class SymmetricLaurent::eval_at_identity() const {
  mpz_class sum = 0;
  for (const auto& [e, c] : poly_.terms()) sum += c;
  return sum;
}

SymmetricLaurent SymmetricLaurent::operator+(const SymmetricLaurent& o) const {
  return SymmetricLaurent(torus_, poly_ + o.poly_);
}
SymmetricLaurent SymmetricLaurent::operator-(const SymmetricLaurent& o) const {
  return SymmetricLaurent(torus_, poly_ - o.poly_);
}
SymmetricLaurent SymmetricLaurent::operator*(const SymmetricLaurent& o) const {
  return SymmetricLaurent(torus_, poly_ * o.poly_);
}

SymmetricLaurent parse_character(std::string_view text, const TorusModelPtr& torus) {
  return SymmetricLaurent(torus, parse_ring_element(text, torus->ring()));
}

namespace {

const TorusBlock& block_of(const TorusModel& torus, const GeneratorInfo& gen) {
  for (const auto& b : torus.blocks())
    if (b.factor_index == gen.factor_index) return b;
  throw UnknownGenerator("generator " + gen.name + " has no torus block");
}

// Elementary symmetric polynomials e_0..e_k of the given weights.
std::vector<RingElement> elementary(const std::vector<RingElement>& weights, std::size_t k,
                                    const RingModelPtr& ring) {
  std::vector<RingElement> e(k + 1, RingElement(ring));
  e[0] = RingElement::constant(ring, 1);
  for (const auto& w : weights)
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * w;
  return e;
}

// Weights of the defining representation of the block, in stored variables.
std::vector<RingElement> defining_weights(const TorusBlock& b, const RingModelPtr& ring) {
  std::vector<RingElement> w;
  for (std::size_t i = 0; i < b.width; ++i) w.push_back(RingElement::variable(ring, b.offset + i));
  if (b.kind == BlockKind::SU) {
    Exponents e(ring->size(), 0);
    for (std::size_t i = 0; i < b.width; ++i) e[b.offset + i] = -1;
    w.push_back(RingElement::monomial(ring, e));
  } else if (b.kind == BlockKind::Sp) {
    for (std::size_t i = 0; i < b.width; ++i) {
      Exponents e(ring->size(), 0);
      e[b.offset + i] = -1;
      w.push_back(RingElement::monomial(ring, e));
    }
  }
  return w;
}

RingElement fundamental_poly(const TorusModel& torus, const GeneratorInfo& gen) {
  const TorusBlock& b = block_of(torus, gen);
  const RingModelPtr& ring = torus.ring();
  const auto k = static_cast<std::size_t>(gen.fundamental);
  switch (b.kind) {
    case BlockKind::Circle:
      return RingElement::variable(ring, b.offset + k - 1);
    case BlockKind::SU:
    case BlockKind::U:
      return elementary(defining_weights(b, ring), k, ring)[k];
    case BlockKind::Sp: {
      // Λ^k V = V(ω_k) ⊕ Λ^{k-2} V for the defining 2n-dim module V.
      auto e = elementary(defining_weights(b, ring), k, ring);
      return k >= 2 ? e[k] - e[k - 2] : e[k];
    }
  }
  throw std::logic_error("unreachable block kind");
}

}  // namespace

SymmetricLaurent fundamental_character(const GroupModel& g, const GeneratorInfo& gen) {
  bool found = false;
  for (const auto& other : g.generators())
    if (other.name == gen.name && other.factor_index == gen.factor_index &&
        other.fundamental == gen.fundamental)
      found = true;
  if (!found) throw UnknownGenerator("generator " + gen.name + " does not belong to " + g.name());
  auto torus = torus_model(g);
  return SymmetricLaurent(torus, fundamental_poly(*torus, gen));
}

SymmetricLaurent to_character(const RingElement& a, const GroupModel& g) {
  if (!(*a.ring() == *g.ring()))
    throw RingMismatch("to_character expects an element of " + g.ring()->id() + ", got " +
                       a.ring()->id());
  auto torus = torus_model(g);
  std::vector<RingElement> images;
  for (const auto& gen : g.generators()) {
    RingElement chi = fundamental_poly(*torus, gen);
    if (gen.kind == VarKind::Polynomial) chi -= RingElement::constant(torus->ring(), gen.rep_dimension);
    images.push_back(std::move(chi));
  }
  RingHom hom(g.ring(), torus->ring(), std::move(images));
  return SymmetricLaurent(torus, hom(a));
}

namespace {

using Poly = std::map<Exponents, mpz_class>;

// Per-block lifted coordinates: SU(n) blocks get n slots normalized to
// minimum 0, other blocks keep their stored slots.
struct LiftedLayout {
  struct Block {
    BlockKind kind;
    int n;
    std::size_t stored_offset, stored_width;
    std::size_t offset, width;
  };
  std::vector<Block> blocks;
  std::size_t size = 0;

  explicit LiftedLayout(const TorusModel& torus) {
    for (const auto& b : torus.blocks()) {
      std::size_t width = b.kind == BlockKind::SU ? b.width + 1 : b.width;
      blocks.push_back({b.kind, b.n, b.offset, b.width, size, width});
      size += width;
    }
  }

  Exponents lift(const Exponents& stored) const {
    Exponents out(size, 0);
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.stored_width; ++i) out[b.offset + i] = stored[b.stored_offset + i];
      if (b.kind == BlockKind::SU) normalize_su(out, b);
    }
    return out;
  }

  static void normalize_su(Exponents& e, const Block& b) {
    auto first = e.begin() + static_cast<long>(b.offset);
    int m = *std::min_element(first, first + static_cast<long>(b.width));
    for (std::size_t i = 0; i < b.width; ++i) e[b.offset + i] -= m;
  }
};

// Block-by-block order: graded lex on SU blocks (their normal form is only
// defined up to the determinant), lex elsewhere. Leading term = maximum.
struct LeadOrder {
  const LiftedLayout* layout;
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (const auto& blk : layout->blocks) {
      auto a0 = a.begin() + static_cast<long>(blk.offset), b0 = b.begin() + static_cast<long>(blk.offset);
      auto a1 = a0 + static_cast<long>(blk.width), b1 = b0 + static_cast<long>(blk.width);
      if (blk.kind == BlockKind::SU) {
        long da = 0, db = 0;
        for (auto it = a0; it != a1; ++it) da += *it;
        for (auto it = b0; it != b1; ++it) db += *it;
        if (da != db) return da < db;
      }
      if (!std::equal(a0, a1, b0)) return std::lexicographical_compare(a0, a1, b0, b1);
    }
    return false;
  }
};

using LiftedPoly = std::map<Exponents, mpz_class, LeadOrder>;

void add_into(Poly& p, const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly block_multiply(const Poly& a, const Poly& b, const LiftedLayout::Block& blk) {
  Poly r;
  Exponents e(blk.width);
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      for (std::size_t i = 0; i < blk.width; ++i) e[i] = ea[i] + eb[i];
      if (blk.kind == BlockKind::SU) {
        int m = *std::min_element(e.begin(), e.end());
        for (auto& x : e) x -= m;
      }
      add_into(r, e, ca * cb);
    }
  return r;
}

// Fundamental characters of one block in its lifted coordinates, plus a
// power cache.
class BlockCharacters {
 public:
  BlockCharacters(const LiftedLayout::Block& blk) : blk_(blk) {
    const std::size_t n = blk.width;
    auto unit = [&](std::size_t i, int s) {
      Exponents e(n, 0);
      e[i] = s;
      return e;
    };
    std::vector<Exponents> weights;
    for (std::size_t i = 0; i < n; ++i) weights.push_back(unit(i, 1));
    if (blk.kind == BlockKind::Sp)
      for (std::size_t i = 0; i < n; ++i) weights.push_back(unit(i, -1));
    if (blk.kind == BlockKind::Circle) {
      for (std::size_t i = 0; i < n; ++i) fundamentals_.push_back(Poly{{unit(i, 1), 1}});
      return;
    }
    const std::size_t top = n;
    std::vector<Poly> e(top + 1);
    e[0][Exponents(n, 0)] = 1;
    LiftedLayout::Block plain = blk;
    plain.kind = BlockKind::U;  // no normalization while building e_k
    for (const auto& w : weights)
      for (std::size_t j = top; j >= 1; --j) {
        Poly term = block_multiply(e[j - 1], Poly{{w, 1}}, plain);
        for (const auto& [x, c] : term) add_into(e[j], x, c);
      }
    const std::size_t count = blk.kind == BlockKind::SU ? n - 1 : n;
    for (std::size_t k = 1; k <= count; ++k) {
      Poly f = e[k];
      if (blk.kind == BlockKind::Sp && k >= 2)
        for (const auto& [x, c] : e[k - 2]) add_into(f, x, -c);
      fundamentals_.push_back(std::move(f));
    }
  }

  const Poly& power(std::size_t which, int exponent) {
    auto key = std::make_pair(which, exponent);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Poly result;
    if (exponent == 0) {
      result[Exponents(blk_.width, 0)] = 1;
    } else if (exponent < 0) {
      // Only the U(n) determinant and circle coordinates get negative powers;
      // both are monomials.
      const Poly& f = fundamentals_.at(which);
      if (f.size() != 1) throw std::logic_error("negative power of a non-monomial character");
      Exponents e = f.begin()->first;
      for (auto& x : e) x *= exponent;
      result[e] = 1;
    } else {
      result = block_multiply(power(which, exponent - 1), fundamentals_.at(which), blk_);
    }
    return cache_.emplace(key, std::move(result)).first->second;
  }

  std::size_t count() const { return fundamentals_.size(); }

 private:
  LiftedLayout::Block blk_;
  std::vector<Poly> fundamentals_;
  std::map<std::pair<std::size_t, int>, Poly> cache_;
};

}  // namespace

RingElement from_character(const SymmetricLaurent& s, const GroupModel& g) {
  const TorusModel& torus = *s.torus();
  if (torus.group_name() != g.name())
    throw RingMismatch("character lives on the torus of " + torus.group_name() + ", not " + g.name());
  if (!s.is_weyl_invariant()) throw NotWeylInvariant("character is not Weyl-invariant: " + s.to_string());

  LiftedLayout layout(torus);
  LeadOrder order{&layout};
  LiftedPoly work(order);
  for (const auto& [e, c] : s.poly().terms()) {
    auto [it, inserted] = work.try_emplace(layout.lift(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) work.erase(it);
    }
  }

  std::vector<BlockCharacters> chars;
  for (const auto& blk : layout.blocks) chars.emplace_back(blk);

  // Generator indices of each block, in inventory order.
  std::vector<std::vector<std::size_t>> block_gens(layout.blocks.size());
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    for (std::size_t b = 0; b < torus.blocks().size(); ++b)
      if (torus.blocks()[b].factor_index == g.generators()[i].factor_index) block_gens[b].push_back(i);

  // Result in the basis of actual representations λ_i (shifted later).
  RingElement in_lambda(g.ring());
  while (!work.empty()) {
    const Exponents lead = work.rbegin()->first;
    const mpz_class coeff = work.rbegin()->second;
    Exponents gen_exps(g.rank(), 0);
    std::vector<Poly> factors;
    for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
      const auto& blk = layout.blocks[b];
      auto lam = [&](std::size_t i) { return i < blk.width ? lead[blk.offset + i] : 0; };
      if (blk.kind != BlockKind::Circle)
        for (std::size_t i = 0; i + 1 < blk.width; ++i)
          if (lam(i) < lam(i + 1))
            throw NotInImage("leading weight is not dominant; elimination cannot proceed");
      if (blk.kind == BlockKind::Sp && lam(blk.width - 1) < 0)
        throw NotInImage("leading Sp weight has a negative entry");
      std::vector<int> multiplicity;
      switch (blk.kind) {
        case BlockKind::Circle:
          for (std::size_t i = 0; i < blk.width; ++i) multiplicity.push_back(lam(i));
          break;
        case BlockKind::SU:
          for (std::size_t k = 0; k + 1 < blk.width; ++k) multiplicity.push_back(lam(k) - lam(k + 1));
          break;
        case BlockKind::U:
          for (std::size_t k = 0; k + 1 < blk.width; ++k) multiplicity.push_back(lam(k) - lam(k + 1));
          multiplicity.push_back(lam(blk.width - 1));
          break;
        case BlockKind::Sp:
          for (std::size_t k = 0; k < blk.width; ++k) multiplicity.push_back(lam(k) - lam(k + 1));
          break;
      }
      Poly block_poly;
      block_poly[Exponents(blk.width, 0)] = 1;
      for (std::size_t k = 0; k < multiplicity.size(); ++k) {
        gen_exps[block_gens[b].at(k)] = multiplicity[k];
        if (multiplicity[k] != 0) block_poly = block_multiply(block_poly, chars[b].power(k, multiplicity[k]), blk);
      }
      factors.push_back(std::move(block_poly));
    }
    // Subtract coeff * (tensor product of block polynomials).
    std::function<void(std::size_t, Exponents&, mpz_class)> expand = [&](std::size_t b, Exponents& e,
                                                                         mpz_class c) {
      if (b == factors.size()) {
        auto [it, inserted] = work.try_emplace(e, -c);
        if (!inserted) {
          it->second -= c;
          if (it->second == 0) work.erase(it);
        }
        return;
      }
      const auto& blk = layout.blocks[b];
      for (const auto& [x, cx] : factors[b]) {
        std::copy(x.begin(), x.end(), e.begin() + static_cast<long>(blk.offset));
        expand(b + 1, e, c * cx);
      }
    };
    Exponents scratch(layout.size, 0);
    expand(0, scratch, coeff);

    in_lambda.add_term(gen_exps, coeff);
    if (!work.empty() && !order(work.rbegin()->first, lead))
      throw std::logic_error("leading-term elimination failed to decrease the leading weight");
  }

  // λ_i = y_i + dim λ_i; circle and determinant generators are unshifted.
  std::vector<RingElement> shift;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    RingElement v = RingElement::variable(g.ring(), i);
    const auto& gen = g.generators()[i];
    if (gen.kind == VarKind::Polynomial) v += RingElement::constant(g.ring(), gen.rep_dimension);
    shift.push_back(std::move(v));
  }
  return RingHom(g.ring(), g.ring(), std::move(shift))(in_lambda);
}

}  // namespace kconj
