#include "kconj/homological.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "kconj/errors.hpp"
#include "kconj/linalg.hpp"

namespace kconj {

FreeComplex::FreeComplex(std::string name, RingModelPtr ring, std::size_t rank)
    : name_(std::move(name)), ring_(std::move(ring)), rank_(rank) {
  for (std::size_t k = 0; k <= rank_; ++k) basis_.push_back(exterior_basis(rank_, k));
  differentials_.resize(rank_ + 1);
}

void FreeComplex::set_augmentation(RingHom hom) {
  if (!(*hom.source() == *ring_)) throw RingMismatch("augmentation must start at " + ring_->id());
  augmentation_.emplace(std::move(hom));
}

int FreeComplex::max_spread() const {
  int s = 0;
  for (const auto& d : differentials_)
    for (const auto& e : d) s = std::max(s, e.value.exponent_spread());
  return s;
}

std::string FreeComplex::basis_label(std::size_t k, std::size_t index) const {
  std::string out = "e{";
  bool first = true;
  for (std::size_t i : basis_.at(k).at(index).elements()) {
    out += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

namespace {

std::map<std::uint64_t, std::size_t> basis_positions(const std::vector<ExteriorIndex>& basis) {
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i].bits] = i;
  return pos;
}

// Fills d_k from the entry γ(z) attached to each exterior generator z.
void fill_koszul_differentials(FreeComplex& c, const std::vector<RingElement>& gamma) {
  for (std::size_t k = 1; k <= c.rank(); ++k) {
    auto rows = basis_positions(c.basis(k - 1));
    const auto& cols = c.basis(k);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const ExteriorIndex s = cols[j];
      for (std::size_t z : s.elements()) {
        const ExteriorIndex rest{s.bits & ~(std::uint64_t{1} << z)};
        RingElement v = gamma[z];
        if (s.position(z) % 2) v = -v;
        c.differential(k).push_back({rows.at(rest.bits), j, std::move(v)});
      }
    }
  }
}

std::string complex_name(const std::string& kind, const GroupModel& g) { return kind + "(" + g.name() + ")"; }

}  // namespace

RingHom multiplication_map(const GroupModel& g) {
  std::vector<RingElement> images;
  for (std::size_t copy = 0; copy < 2; ++copy)
    for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(RingElement::variable(g.ring(), i));
  return RingHom(g.doubled_ring(), g.ring(), std::move(images));
}

RingHom augmentation_map(const GroupModel& g) {
  std::vector<RingElement> images;
  for (const auto& gen : g.generators())
    images.push_back(RingElement::constant(integer_ring(), gen.kind == VarKind::Laurent ? 1 : 0));
  return RingHom(g.ring(), integer_ring(), std::move(images));
}

FreeComplex build_koszul_resolution(const GroupModel& g) {
  const std::size_t r = g.rank();
  const RingModelPtr& ring = g.doubled_ring();
  FreeComplex c(complex_name("koszul", g), ring, r);
  std::vector<RingElement> gamma;
  for (std::size_t i = 0; i < r; ++i) {
    // γ(z)' - γ(z); the -1 of γ(w_j) = t_j - 1 cancels.
    gamma.push_back(RingElement::variable(ring, i + r) - RingElement::variable(ring, i));
  }
  fill_koszul_differentials(c, gamma);
  c.set_augmentation(multiplication_map(g));
  return c;
}

FreeComplex build_augmentation_resolution(const GroupModel& g) {
  const std::size_t r = g.rank();
  const RingModelPtr& ring = g.ring();
  FreeComplex c(complex_name("augmentation", g), ring, r);
  std::vector<RingElement> gamma;
  for (std::size_t i = 0; i < r; ++i) {
    RingElement v = RingElement::variable(ring, i);
    if (g.generators()[i].kind == VarKind::Laurent) v -= RingElement::constant(ring, 1);
    gamma.push_back(std::move(v));
  }
  fill_koszul_differentials(c, gamma);
  c.set_augmentation(augmentation_map(g));
  return c;
}

FreeComplex tensor_down(const FreeComplex& c, const RingHom& hom) {
  if (!(*hom.source() == *c.ring())) throw RingMismatch("base change must start at " + c.ring()->id());
  FreeComplex out(c.name() + "⊗" + hom.target()->id(), hom.target(), c.rank());
  for (std::size_t k = 1; k <= c.rank(); ++k)
    for (const auto& e : c.differential(k)) {
      RingElement v = hom(e.value);
      if (!v.is_zero()) out.differential(k).push_back({e.row, e.col, std::move(v)});
    }
  return out;
}

FreeComplex corrupt_sign_fixture(const FreeComplex& c, std::size_t degree, std::size_t entry) {
  FreeComplex out = c;
  degree = std::min(degree, c.rank());
  if (degree == 0 || out.differential(degree).empty())
    throw std::invalid_argument("complex has no differential entries to corrupt");
  auto& d = out.differential(degree);
  auto& e = d.at(entry % d.size());
  e.value = -e.value;
  return out;
}

nlohmann::json SquareZeroReport::to_json() const {
  return {{"ok", ok}, {"compositions_checked", compositions_checked}, {"nonzero", nonzero}};
}

SquareZeroReport differential_squared_is_zero(const FreeComplex& c) {
  SquareZeroReport report;
  for (std::size_t k = 2; k <= c.rank(); ++k) {
    std::map<std::size_t, std::vector<const MatrixEntry*>> lower_by_col;
    for (const auto& e : c.differential(k - 1)) lower_by_col[e.col].push_back(&e);
    std::map<std::size_t, std::map<std::size_t, RingElement>> composite;  // col -> row -> value
    for (const auto& e : c.differential(k)) {
      auto& column = composite[e.col];
      for (const MatrixEntry* f : lower_by_col[e.row]) {
        auto it = column.try_emplace(f->row, RingElement(c.ring())).first;
        it->second += f->value * e.value;
      }
    }
    for (const auto& [col, column] : composite)
      for (const auto& [row, value] : column) {
        ++report.compositions_checked;
        if (!value.is_zero()) {
          report.ok = false;
          report.nonzero.push_back("d" + std::to_string(k - 1) + "∘d" + std::to_string(k) + " at (" +
                                   c.basis_label(k - 2, row) + ", " + c.basis_label(k, col) + ") = " +
                                   value.to_string());
        }
      }
  }
  if (c.augmentation() && c.rank() >= 1) {
    std::map<std::size_t, RingElement> composite;
    for (const auto& e : c.differential(1)) {
      auto it = composite.try_emplace(e.col, RingElement(c.augmentation()->target())).first;
      it->second += (*c.augmentation())(e.value);
    }
    for (const auto& [col, value] : composite) {
      ++report.compositions_checked;
      if (!value.is_zero()) {
        report.ok = false;
        report.nonzero.push_back("aug∘d1 at " + c.basis_label(1, col) + " = " + value.to_string());
      }
    }
  }
  return report;
}

ExponentWindow ExponentWindow::uniform(const RingModel& ring, int bound, int padding) {
  ExponentWindow w;
  w.padding = padding;
  for (const auto& v : ring.variables()) {
    w.lower.push_back(v.kind == VarKind::Polynomial ? 0 : -bound);
    w.upper.push_back(bound);
  }
  return w;
}

ExponentWindow ExponentWindow::padded(const RingModel& ring) const {
  ExponentWindow w = *this;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    w.lower[i] = lower[i] - padding;
    if (ring.kind(i) == VarKind::Polynomial) w.lower[i] = std::max(0, w.lower[i]);
    w.upper[i] = upper[i] + padding;
  }
  w.padding = 0;
  return w;
}

std::size_t ExponentWindow::monomial_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) n *= static_cast<std::size_t>(std::max(0, upper[i] - lower[i] + 1));
  return n;
}

bool ExponentWindow::contains(const Exponents& e) const {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (e[i] < lower[i] || e[i] > upper[i]) return false;
  return true;
}

nlohmann::json ExponentWindow::to_json() const { return {{"lower", lower}, {"upper", upper}}; }

nlohmann::json HomologyReport::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& f : torsion) t.push_back(f.get_str());
  return {{"complex", complex},
          {"degree", degree},
          {"display_degree", -degree},
          {"inner_window", inner_window.to_json()},
          {"padding", padding},
          {"cells", cells},
          {"image_rank", image_rank},
          {"rank_cycles", rank_cycles},
          {"rank_boundaries", rank_boundaries},
          {"deficit", deficit},
          {"augmented", augmented},
          {"torsion", t},
          {"torsion_complete", torsion_complete},
          {"components", components}};
}

namespace {

// Mixed-radix code for monomials inside a box.
class MonomialCodec {
 public:
  MonomialCodec(std::vector<int> lower, std::vector<int> upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    __int128 size = 1;
    for (std::size_t i = 0; i < lower_.size(); ++i) {
      stride_.push_back(static_cast<std::uint64_t>(size));
      size *= upper_[i] - lower_[i] + 1;
      if (size > (static_cast<__int128>(1) << 52)) throw std::length_error("exponent window too large to encode");
    }
    size_ = static_cast<std::uint64_t>(size);
  }
  std::uint64_t size() const { return size_; }
  std::uint64_t encode(const Exponents& e) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < lower_[i] || e[i] > upper_[i]) throw std::logic_error("monomial outside encoding box");
      code += static_cast<std::uint64_t>(e[i] - lower_[i]) * stride_[i];
    }
    return code;
  }
  Exponents decode(std::uint64_t code) const {
    Exponents e(lower_.size());
    for (std::size_t i = lower_.size(); i-- > 0;) {
      e[i] = static_cast<int>(code / stride_[i]) + lower_[i];
      code %= stride_[i];
    }
    return e;
  }

 private:
  std::vector<int> lower_, upper_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_ = 1;
};

template <class F>
void for_each_monomial(const ExponentWindow& w, F&& f) {
  const std::size_t n = w.lower.size();
  for (std::size_t i = 0; i < n; ++i)
    if (w.upper[i] < w.lower[i]) return;
  Exponents e = w.lower;
  while (true) {
    f(e);
    std::size_t i = 0;
    while (i < n && e[i] == w.upper[i]) {
      e[i] = w.lower[i];
      ++i;
    }
    if (i == n) return;
    ++e[i];
  }
}

std::int64_t to_int64(const mpz_class& c) {
  if (!c.fits_slong_p()) throw std::overflow_error("differential coefficient exceeds 64 bits");
  return c.get_si();
}

struct ColumnTerm {
  std::size_t row;
  Exponents shift;
  std::int64_t coeff;
};

// Terms of d_k grouped by source basis element.
std::vector<std::vector<ColumnTerm>> column_terms(const FreeComplex& c, std::size_t k) {
  std::vector<std::vector<ColumnTerm>> out(c.basis(k).size());
  for (const auto& e : c.differential(k))
    for (const auto& [exps, coeff] : e.value.terms()) out[e.col].push_back({e.row, exps, to_int64(coeff)});
  return out;
}

struct Assembled {
  std::vector<SparseColumn> full;
  std::vector<SparseColumn> outer;  // only rows outside the inner window
};

// Columns of d_k on cells (monomial in `domain`) × basis_k. Row codes are
// (monomial code) · |basis_{k-1}| + row.
Assembled assemble(const FreeComplex& c, std::size_t k, const ExponentWindow& domain, const ExponentWindow& inner,
                   const MonomialCodec& codec, bool want_outer) {
  Assembled a;
  const auto terms = column_terms(c, k);
  const std::uint64_t nrows = c.basis(k - 1).size();
  const std::size_t n = c.ring()->size();
  Exponents target(n);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    for_each_monomial(domain, [&](const Exponents& m) {
      SparseColumn full, outer;
      for (const auto& t : terms[j]) {
        for (std::size_t i = 0; i < n; ++i) target[i] = m[i] + t.shift[i];
        std::uint64_t code = codec.encode(target) * nrows + t.row;
        full.entries.emplace_back(code, t.coeff);
        if (want_outer && !inner.contains(target)) outer.entries.emplace_back(code, t.coeff);
      }
      auto tidy = [](SparseColumn& col) {
        std::sort(col.entries.begin(), col.entries.end());
        std::size_t w = 0;
        for (std::size_t r = 0; r < col.entries.size(); ++r) {
          if (w > 0 && col.entries[w - 1].first == col.entries[r].first)
            col.entries[w - 1].second += col.entries[r].second;
          else
            col.entries[w++] = col.entries[r];
        }
        col.entries.resize(w);
        std::erase_if(col.entries, [](const auto& p) { return p.second == 0; });
      };
      tidy(full);
      a.full.push_back(std::move(full));
      if (want_outer) {
        tidy(outer);
        a.outer.push_back(std::move(outer));
      }
    });
  }
  return a;
}

// Torsion of (windowed cycles) / (windowed boundaries) block by block:
// boundaries lying in the window form M_inner · ker_Z(M_outer), and since the
// cycle lattice is saturated the torsion is that of the cokernel of this map.
void torsion_pass(const Assembled& a, const MonomialCodec& codec, std::uint64_t nrows, const ExponentWindow& inner,
                  std::size_t limit, HomologyReport& report) {
  for (const auto& block : connected_blocks(a.full)) {
    if (block.row_codes.size() > limit || block.column_ids.size() > limit) {
      report.torsion_complete = false;
      continue;
    }
    std::vector<std::size_t> inner_rows, outer_rows;
    for (std::size_t r = 0; r < block.row_codes.size(); ++r)
      (inner.contains(codec.decode(block.row_codes[r] / nrows)) ? inner_rows : outer_rows).push_back(r);
    const std::size_t ncols = block.column_ids.size();
    IntMatrix mi(inner_rows.size(), ncols), mo(outer_rows.size(), ncols);
    std::unordered_map<std::uint64_t, std::pair<bool, std::size_t>> where;
    for (std::size_t i = 0; i < inner_rows.size(); ++i) where[block.row_codes[inner_rows[i]]] = {true, i};
    for (std::size_t i = 0; i < outer_rows.size(); ++i) where[block.row_codes[outer_rows[i]]] = {false, i};
    for (std::size_t j = 0; j < ncols; ++j)
      for (const auto& [code, x] : a.full[block.column_ids[j]].entries) {
        auto [is_inner, idx] = where.at(code);
        (is_inner ? mi : mo)(idx, j) = static_cast<long>(x);
      }
    IntMatrix kernel;
    if (mo.rows() == 0) {
      kernel = IntMatrix::identity(ncols);
    } else {
      SmithForm s = smith_normal_form(mo);
      const std::size_t r = s.rank();
      kernel = IntMatrix(ncols, ncols - r);
      for (std::size_t i = 0; i < ncols; ++i)
        for (std::size_t j = r; j < ncols; ++j) kernel(i, j - r) = s.v(i, j);
    }
    if (kernel.cols() == 0 || mi.rows() == 0) continue;
    for (const auto& f : smith_normal_form(mi * kernel).invariant_factors())
      if (f != 1) report.torsion.push_back(f);
  }
}

}  // namespace

HomologyReport window_homology(const FreeComplex& c, const ExponentWindow& w, int degree,
                               const WindowOptions& options) {
  const RingModel& ring = *c.ring();
  if (degree < 0 || static_cast<std::size_t>(degree) > c.rank())
    throw std::out_of_range("homological degree " + std::to_string(degree) + " outside 0.." +
                            std::to_string(c.rank()));
  if (w.lower.size() != ring.size() || w.upper.size() != ring.size())
    throw RingMismatch("window has the wrong number of variables for " + ring.id());
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring.kind(i) == VarKind::Polynomial && w.lower[i] < 0)
      throw WindowTooSmall("negative lower bound on polynomial variable " + ring.variables()[i].name);
  const int spread = c.max_spread();
  if (w.padding < spread)
    throw WindowTooSmall("padding " + std::to_string(w.padding) + " below differential spread " +
                         std::to_string(spread));

  const auto k = static_cast<std::size_t>(degree);
  HomologyReport report;
  report.complex = c.name();
  report.degree = degree;
  report.inner_window = w;
  report.padding = w.padding;
  report.cells = w.monomial_count() * c.basis(k).size();

  const ExponentWindow padded = w.padded(ring);
  int reach = 0;
  for (std::size_t d = 1; d <= c.rank(); ++d)
    for (const auto& e : c.differential(d))
      for (const auto& [exps, coeff] : e.value.terms())
        for (int x : exps) reach = std::max(reach, std::abs(x));
  std::vector<int> lo = padded.lower, hi = padded.upper;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] -= reach;
    hi[i] += reach;
  }
  const MonomialCodec codec(lo, hi);

  // Image of d_k (or of the augmentation at k = 0) on windowed chains.
  SparseRankStats stats;
  if (k == 0) {
    if (c.augmentation() && options.use_augmentation) {
      report.augmented = true;
      std::map<Exponents, std::uint64_t> target_codes;
      std::vector<SparseColumn> cols;
      for_each_monomial(w, [&](const Exponents& m) {
        SparseColumn col;
        const RingElement image = c.augmentation()->apply_monomial(m);
        for (const auto& [e, coeff] : image.terms()) {
          auto it = target_codes.try_emplace(e, target_codes.size()).first;
          col.entries.emplace_back(it->second, to_int64(coeff));
        }
        std::sort(col.entries.begin(), col.entries.end());
        cols.push_back(std::move(col));
      });
      report.image_rank = sparse_rank(cols, &stats, options.threads);
    }
  } else {
    Assembled img = assemble(c, k, w, w, codec, false);
    report.image_rank = sparse_rank(img.full, &stats, options.threads);
  }
  report.components += stats.components;
  report.rank_cycles = report.cells - report.image_rank;

  if (k < c.rank()) {
    Assembled bnd = assemble(c, k + 1, padded, w, codec, true);
    SparseRankStats s1, s2;
    const std::size_t full = sparse_rank(bnd.full, &s1, options.threads);
    const std::size_t outer = sparse_rank(bnd.outer, &s2, options.threads);
    report.components += s1.components;
    report.rank_boundaries = full - outer;
    if (options.compute_torsion)
      torsion_pass(bnd, codec, c.basis(k).size(), w, options.torsion_block_limit, report);
  }
  report.deficit = static_cast<long>(report.rank_cycles) - static_cast<long>(report.rank_boundaries);
  return report;
}

nlohmann::json TorTable::to_json() const {
  return {{"rank", rank},
          {"degrees", [&] {
             std::vector<long> d;
             for (std::size_t k = 0; k <= rank; ++k) d.push_back(-static_cast<long>(k));
             return d;
           }()},
          {"tor_RGxRG_RG_RG_over_RG", bimodule},
          {"tor_RG_Z_Z_over_Z", augmentation},
          {"checked_degrees", checked_degrees},
          {"cross_checked", cross_checked},
          {"mismatches", mismatches}};
}

TorTable tor_ranks(const GroupModel& g, std::size_t check_degrees, int window_bound) {
  TorTable t;
  t.rank = g.rank();
  const FreeComplex bimod = tensor_down(build_koszul_resolution(g), multiplication_map(g));
  const FreeComplex aug = tensor_down(build_augmentation_resolution(g), augmentation_map(g));
  for (std::size_t k = 0; k <= t.rank; ++k) {
    // Zero differential after tensoring down: the homology is the chain module.
    long free_rank = static_cast<long>(bimod.basis(k).size());
    t.bimodule.push_back(free_rank);
    t.augmentation.push_back(static_cast<long>(aug.basis(k).size()));
  }
  for (std::size_t k = 1; k <= t.rank; ++k)
    if (!bimod.differential(k).empty() || !aug.differential(k).empty()) {
      t.cross_checked = false;
      t.mismatches.push_back("tensored-down differential d" + std::to_string(k) + " is not zero");
    }
  WindowOptions opts;
  opts.compute_torsion = false;
  const std::size_t top = std::min(check_degrees, t.rank);
  for (std::size_t k = 0; k <= top; ++k) {
    ExponentWindow wr = ExponentWindow::uniform(*bimod.ring(), window_bound, std::max(1, bimod.max_spread()));
    HomologyReport hr = window_homology(bimod, wr, static_cast<int>(k), opts);
    const long expect_r = t.bimodule[k] * static_cast<long>(wr.monomial_count());
    if (hr.deficit != expect_r) {
      t.cross_checked = false;
      t.mismatches.push_back("bimodule degree -" + std::to_string(k) + ": window homology " +
                             std::to_string(hr.deficit) + ", expected " + std::to_string(expect_r));
    }
    ExponentWindow wz = ExponentWindow::uniform(*aug.ring(), window_bound, 1);
    HomologyReport hz = window_homology(aug, wz, static_cast<int>(k), opts);
    if (hz.deficit != t.augmentation[k]) {
      t.cross_checked = false;
      t.mismatches.push_back("augmentation degree -" + std::to_string(k) + ": window homology " +
                             std::to_string(hz.deficit) + ", expected " + std::to_string(t.augmentation[k]));
    }
  }
  t.checked_degrees = top + 1;
  return t;
}

std::vector<RegularityStep> regular_sequence_certificate(const GroupModel& g) {
  std::vector<RegularityStep> steps;
  const FreeComplex koszul = build_koszul_resolution(g);
  const RingModelPtr& ring = g.doubled_ring();
  const std::size_t r = g.rank();
  for (std::size_t i = 0; i < r; ++i) {
    RegularityStep step;
    step.generator = g.generators()[i].name;
    // The degree-1 differential of e_{z_i} is the i-th sequence element.
    RingElement u(ring);
    for (const auto& e : koszul.differential(1))
      if (e.col == i) u = e.value;
    step.element = u.to_string();
    const RingElement x = RingElement::variable(ring, i), xp = RingElement::variable(ring, i + r);
    if (g.generators()[i].kind == VarKind::Polynomial) {
      step.rewrite = "u = " + u.to_string() + " replaces " + ring->variables()[i + r].name + " as a coordinate";
      step.verified = u == xp - x && u.derivative(i + r) == RingElement::constant(ring, 1);
    } else {
      Exponents s_exps(2 * r, 0);
      s_exps[i] = -1;
      s_exps[i + r] = 1;
      const RingElement s = RingElement::monomial(ring, s_exps);
      step.rewrite = u.to_string() + " = " + x.to_string() + "*(s-1), s = " + s.to_string() + " a unit";
      step.verified = x * (s - RingElement::constant(ring, 1)) == u && x.inverse().has_value() &&
                      s.inverse().has_value();
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace kconj
