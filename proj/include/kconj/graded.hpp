#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kconj/errors.hpp"
#include "kconj/group_model.hpp"
#include "kconj/parser.hpp"
#include "kconj/ring.hpp"

namespace kconj {

/// A subset of the exterior generators (one per Hodgkin generator), stored
/// as a bitmask. Ordered by cardinality, then lexicographically on the
/// ascending element lists.
struct ExteriorIndex {
  std::uint64_t bits = 0;

  static ExteriorIndex single(std::size_t i) { return {std::uint64_t{1} << i}; }

  int degree() const noexcept { return std::popcount(bits); }
  bool contains(std::size_t i) const noexcept { return (bits >> i) & 1U; }
  std::vector<std::size_t> elements() const;

  /// Position of i among the ascending elements, or -1 if absent.
  int position(std::size_t i) const noexcept;

  bool operator==(const ExteriorIndex&) const = default;
  bool operator<(const ExteriorIndex& o) const noexcept;
};

/// Sign of e_S ∧ e_T = ±e_{S∪T}: the parity of pairs (s, t) with s > t.
/// Returns 0 when S and T intersect.
int wedge_sign(ExteriorIndex s, ExteriorIndex t) noexcept;

/// All k-subsets of {0..r-1} in ExteriorIndex order.
std::vector<ExteriorIndex> exterior_basis(std::size_t r, std::size_t k);

/// Degree-k monomial name, e.g. `b[y1]∧b[t1]` (or `1` for the empty set).
template <class Tag>
std::string exterior_name(const GroupModel& g, ExteriorIndex s) {
  if (s.bits == 0) return "1";
  std::string out;
  for (std::size_t i : s.elements()) {
    if (!out.empty()) out += "∧";
    out += Tag::symbol(g.generators().at(i).name);
  }
  return out;
}

/// Element of RG ⊗ Λ[generators]: a map from exterior index to a nonzero
/// coefficient in RG. Tag fixes how the generators are named and keeps
/// K-classes and differential forms from being mixed.
template <class Tag>
class GradedForm {
 public:
  using Components = std::map<ExteriorIndex, RingElement>;

  explicit GradedForm(GroupPtr group) : group_(std::move(group)) {}

  static GradedForm scalar(GroupPtr group, RingElement coeff) {
    GradedForm f(std::move(group));
    f.add_component({}, std::move(coeff));
    return f;
  }
  static GradedForm basis(GroupPtr group, ExteriorIndex s, const mpz_class& coeff = 1) {
    GradedForm f(group);
    f.add_component(s, RingElement::constant(group->ring(), coeff));
    return f;
  }
  static GradedForm generator(GroupPtr group, std::size_t i) {
    return basis(std::move(group), ExteriorIndex::single(i));
  }

  const GroupPtr& group() const noexcept { return group_; }
  const Components& components() const noexcept { return components_; }
  bool is_zero() const noexcept { return components_.empty(); }

  RingElement coefficient(ExteriorIndex s) const {
    auto it = components_.find(s);
    return it == components_.end() ? RingElement(group_->ring()) : it->second;
  }

  void add_component(ExteriorIndex s, const RingElement& coeff) {
    if (!(*coeff.ring() == *group_->ring()))
      throw RingMismatch("coefficient must lie in " + group_->ring()->id());
    if (s.bits >> group_->rank())
      throw UnknownGenerator("exterior index outside the generator range of " + group_->name());
    if (coeff.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(s, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) components_.erase(it);
    }
  }

  /// Exterior degree if homogeneous; nullopt for mixed degrees; 0 for zero.
  std::optional<int> degree() const {
    if (components_.empty()) return 0;
    int d = components_.begin()->first.degree();
    for (const auto& [s, c] : components_)
      if (s.degree() != d) return std::nullopt;
    return d;
  }

  /// Z/2 grading; nullopt if the parities are mixed.
  std::optional<int> parity() const {
    if (components_.empty()) return 0;
    int p = components_.begin()->first.degree() % 2;
    for (const auto& [s, c] : components_)
      if (s.degree() % 2 != p) return std::nullopt;
    return p;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& [s, c] : components_) d = std::max(d, s.degree());
    return d;
  }

  GradedForm& operator+=(const GradedForm& o) {
    require_same_group(o);
    for (const auto& [s, c] : o.components_) add_component(s, c);
    return *this;
  }
  GradedForm& operator-=(const GradedForm& o) {
    require_same_group(o);
    for (const auto& [s, c] : o.components_) add_component(s, -c);
    return *this;
  }
  GradedForm operator-() const {
    GradedForm r(group_);
    for (const auto& [s, c] : components_) r.add_component(s, -c);
    return r;
  }
  friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
  friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }

  /// Graded-commutative product: (σ e_S)(τ e_T) = sign(S,T) στ e_{S∪T}.
  friend GradedForm operator*(const GradedForm& a, const GradedForm& b) {
    a.require_same_group(b);
    GradedForm r(a.group_);
    for (const auto& [s, cs] : a.components_)
      for (const auto& [t, ct] : b.components_) {
        int sign = wedge_sign(s, t);
        if (sign == 0) continue;
        RingElement c = cs * ct;
        if (sign < 0) c = -c;
        r.add_component({s.bits | t.bits}, c);
      }
    return r;
  }

  /// RG-module action.
  friend GradedForm operator*(const RingElement& sigma, const GradedForm& a) {
    GradedForm r(a.group_);
    for (const auto& [s, c] : a.components_) r.add_component(s, sigma * c);
    return r;
  }

  bool operator==(const GradedForm& o) const {
    return *group_ == *o.group_ && components_ == o.components_;
  }

  template <class OtherTag>
  GradedForm<OtherTag> retag() const {
    GradedForm<OtherTag> r(group_);
    for (const auto& [s, c] : components_) r.add_component(s, c);
    return r;
  }

  std::string to_string() const {
    if (components_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : components_) {
      bool negative = false;
      std::string coeff;
      if (c.size() == 1) {
        RingElement mag = c;
        if (mag.terms().begin()->second < 0) {
          negative = true;
          mag = -mag;
        }
        coeff = mag.to_string();
      } else {
        coeff = "(" + c.to_string() + ")";
      }
      std::string body;
      if (s.bits == 0)
        body = coeff;
      else if (coeff == "1")
        body = exterior_name<Tag>(*group_, s);
      else
        body = coeff + " " + exterior_name<Tag>(*group_, s);
      if (first)
        out += negative ? "-" + body : body;
      else
        out += (negative ? " - " : " + ") + body;
      first = false;
    }
    return out;
  }

 private:
  void require_same_group(const GradedForm& o) const {
    if (!(*group_ == *o.group_))
      throw GroupMismatch("group mismatch: " + group_->name() + " vs " + o.group_->name());
  }

  GroupPtr group_;
  Components components_;
};

/// Parses text produced by GradedForm::to_string (and hand-written variants
/// using `*`, `∧` or juxtaposition for products).
template <class Tag>
GradedForm<Tag> parse_graded_form(std::string_view text, const GroupPtr& group) {
  struct Traits {
    using Value = GradedForm<Tag>;
    GroupPtr group;

    Value from_integer(const mpz_class& n) const {
      return Value::scalar(group, RingElement::constant(group->ring(), n));
    }
    Value identifier(const std::string& name, std::size_t pos) const {
      if (auto idx = group->ring()->find(name))
        return Value::scalar(group, RingElement::variable(group->ring(), *idx));
      for (std::size_t i = 0; i < group->rank(); ++i)
        if (Tag::symbol(group->generators()[i].name) == name) return Value::generator(group, i);
      throw ParseError("unknown symbol '" + name + "'", pos);
    }
    Value power(const Value& base, long e, std::size_t pos) const {
      if (base.max_degree() == 0) {
        try {
          return Value::scalar(group, base.coefficient({}).pow(e));
        } catch (const NotInvertible& err) {
          throw ParseError(err.what(), pos);
        }
      }
      if (e < 0) throw ParseError("negative power of a class with exterior part", pos);
      Value r = from_integer(1);
      for (long i = 0; i < e && !r.is_zero(); ++i) r = r * base;
      return r;
    }
  };
  Traits traits{group};
  return detail::ExpressionParser<Traits>(text, traits).parse();
}

/// Element of Λ[generators] over Z: the image of the forgetful map.
class IntegralClass {
 public:
  using Components = std::map<ExteriorIndex, mpz_class>;

  explicit IntegralClass(GroupPtr group) : group_(std::move(group)) {}

  const GroupPtr& group() const noexcept { return group_; }
  const Components& components() const noexcept { return components_; }
  bool is_zero() const noexcept { return components_.empty(); }
  mpz_class coefficient(ExteriorIndex s) const {
    auto it = components_.find(s);
    return it == components_.end() ? mpz_class(0) : it->second;
  }

  void add_component(ExteriorIndex s, const mpz_class& c);

  friend IntegralClass operator*(const IntegralClass& a, const IntegralClass& b);
  bool operator==(const IntegralClass& o) const { return components_ == o.components_; }

  /// Printed with the `b[..]` names of the K-theory generators.
  std::string to_string() const;

 private:
  GroupPtr group_;
  Components components_;
};

}  // namespace kconj
