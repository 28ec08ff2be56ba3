#include "kconj/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kconj/errors.hpp"

namespace kconj {

RingModel::RingModel(std::string id, std::vector<Variable> variables, bool doubled)
    : id_(std::move(id)), variables_(std::move(variables)), doubled_(doubled) {}

std::optional<std::size_t> RingModel::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  return std::nullopt;
}

bool RingModel::operator==(const RingModel& other) const {
  return this == &other || (id_ == other.id_ && variables_ == other.variables_ &&
                            doubled_ == other.doubled_);
}

RingModelPtr integer_ring() {
  static const RingModelPtr z = std::make_shared<const RingModel>("Z", std::vector<Variable>{});
  return z;
}

RingElement::RingElement(RingModelPtr ring) : ring_(std::move(ring)) {}

RingElement RingElement::constant(RingModelPtr ring, const mpz_class& value) {
  RingElement r(ring);
  r.add_term(Exponents(r.ring_->size(), 0), value);
  return r;
}

RingElement RingElement::variable(RingModelPtr ring, std::size_t index) {
  RingElement r(ring);
  Exponents e(r.ring_->size(), 0);
  e.at(index) = 1;
  r.add_term(e, 1);
  return r;
}

RingElement RingElement::monomial(RingModelPtr ring, Exponents exps, const mpz_class& coeff) {
  RingElement r(ring);
  r.add_term(exps, coeff);
  return r;
}

bool RingElement::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

mpz_class RingElement::constant_term() const {
  auto it = terms_.find(Exponents(ring_->size(), 0));
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void RingElement::check_exponents(const Exponents& exps) const {
  if (exps.size() != ring_->size())
    throw RingMismatch("exponent vector length does not match ring " + ring_->id());
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < 0 && ring_->kind(i) == VarKind::Polynomial)
      throw NotInvertible("negative exponent on polynomial generator " +
                          ring_->variables()[i].name);
}

void RingElement::add_term(const Exponents& exps, const mpz_class& coeff) {
  if (coeff == 0) return;
  check_exponents(exps);
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void RingElement::require_same_ring(const RingElement& other) const {
  if (!(*ring_ == *other.ring_))
    throw RingMismatch("ring mismatch: " + ring_->id() + " vs " + other.ring_->id());
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  *this = *this * other;
  return *this;
}

RingElement& RingElement::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.require_same_ring(b);
  RingElement r(a.ring_);
  const std::size_t n = a.ring_->size();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

bool RingElement::operator==(const RingElement& other) const {
  return *ring_ == *other.ring_ && terms_ == other.terms_;
}

std::optional<RingElement> RingElement::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (c != 1 && c != -1) return std::nullopt;
  Exponents inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0 && ring_->kind(i) == VarKind::Polynomial) return std::nullopt;
    inv[i] = -e[i];
  }
  return monomial(ring_, inv, c);
}

RingElement RingElement::pow(long exponent) const {
  RingElement base = *this;
  if (exponent < 0) {
    auto inv = inverse();
    if (!inv) throw NotInvertible("negative power of a non-unit in " + ring_->id());
    base = *inv;
    exponent = -exponent;
  }
  RingElement result = constant(ring_, 1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

mpz_class RingElement::augmentation() const {
  mpz_class sum = 0;
  for (const auto& [e, c] : terms_) {
    bool dies = false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (ring_->kind(i) == VarKind::Polynomial && e[i] != 0) dies = true;
    if (!dies) sum += c;
  }
  return sum;
}

RingElement RingElement::derivative(std::size_t var) const {
  if (var >= ring_->size()) throw UnknownGenerator("no variable with index " + std::to_string(var));
  RingElement r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

int RingElement::exponent_spread() const {
  int spread = 0;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (terms_.empty()) break;
    int lo = terms_.begin()->first[i], hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[i]);
      hi = std::max(hi, e[i]);
    }
    spread = std::max(spread, hi - lo);
  }
  return spread;
}

std::string format_monomial(const RingModel& ring, const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i].name;
    if (exps[i] != 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

namespace {

long total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

}  // namespace

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, ties broken by descending exponent vector.
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    long da = total_degree(a->first), db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const mpz_class& c = t->second;
    std::string mono = format_monomial(*ring_, t->first);
    mpz_class mag = abs(c);
    std::string body;
    if (mono.empty())
      body = mag.get_str();
    else if (mag == 1)
      body = mono;
    else
      body = mag.get_str() + "*" + mono;
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    out += body;
    first = false;
  }
  return out;
}

IndecomposableVector indecomposable_coordinates(const RingElement& a) {
  const RingModel& ring = *a.ring();
  if (ring.doubled())
    throw RingMismatch("indecomposable coordinates require a single-copy ring, got " + ring.id());
  IndecomposableVector v;
  v.coords.assign(ring.size(), 0);
  // Substitute t_j = 1 + s_j and keep total degree <= 1 in (y, s):
  // y^a (1+s)^b ≡ [a = 0](1 + Σ b_j s_j) + [a = e_i] y_i  (mod (IG)^2).
  for (const auto& [e, c] : a.terms()) {
    int ydeg = 0;
    std::size_t yvar = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (ring.kind(i) == VarKind::Polynomial && e[i] != 0) {
        ydeg += e[i];
        yvar = i;
      }
    }
    if (ydeg == 0) {
      v.constant_part += c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (ring.kind(i) == VarKind::Laurent) v.coords[i] += c * e[i];
    } else if (ydeg == 1) {
      v.coords[yvar] += c;
    }
  }
  return v;
}

RingHom::RingHom(RingModelPtr source, RingModelPtr target, std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size())
    throw RingMismatch("homomorphism needs one image per variable of " + source_->id());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!(*images_[i].ring() == *target_))
      throw RingMismatch("image of " + source_->variables()[i].name + " not in " + target_->id());
    if (source_->kind(i) == VarKind::Laurent) {
      auto inv = images_[i].inverse();
      if (!inv)
        throw NotInvertible("Laurent generator " + source_->variables()[i].name +
                            " must map to a unit");
      inverses_.push_back(std::move(inv));
    } else {
      inverses_.emplace_back();
    }
  }
}

RingElement RingHom::apply_monomial(const Exponents& exps) const {
  RingElement r = RingElement::constant(target_, 1);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (exps[i] > 0)
      r *= images_[i].pow(exps[i]);
    else
      r *= inverses_[i]->pow(-exps[i]);
    if (r.is_zero()) break;
  }
  return r;
}

RingElement RingHom::operator()(const RingElement& a) const {
  if (!(*a.ring() == *source_))
    throw RingMismatch("homomorphism source is " + source_->id() + ", got " + a.ring()->id());
  RingElement r(target_);
  for (const auto& [e, c] : a.terms()) r += apply_monomial(e) * c;
  return r;
}

}  // namespace kconj
