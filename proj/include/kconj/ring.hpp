#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kconj {

using Exponents = std::vector<int>;

enum class VarKind { Polynomial, Laurent };

struct Variable {
  std::string name;
  VarKind kind;

  bool operator==(const Variable&) const = default;
};

/// Ambient ring Z[y_1..y_a] ⊗ Z[t_1^±..t_b^±]. The doubled ring RG⊗RG is the
/// same object with the variable list concatenated with primed copies.
class RingModel {
 public:
  RingModel(std::string id, std::vector<Variable> variables, bool doubled = false);

  const std::string& id() const noexcept { return id_; }
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  bool doubled() const noexcept { return doubled_; }
  VarKind kind(std::size_t i) const { return variables_.at(i).kind; }
  std::optional<std::size_t> find(std::string_view name) const;

  bool operator==(const RingModel& other) const;

 private:
  std::string id_;
  std::vector<Variable> variables_;
  bool doubled_;
};

using RingModelPtr = std::shared_ptr<const RingModel>;

/// The ring Z, with no variables.
RingModelPtr integer_ring();

/// Sparse Laurent polynomial with arbitrary-precision coefficients. Terms are
/// kept in a map keyed by exponent vector, so the representation is
/// canonical: no zero coefficients, no negative exponent on a polynomial-kind
/// variable.
class RingElement {
 public:
  using Terms = std::map<Exponents, mpz_class>;

  explicit RingElement(RingModelPtr ring);

  static RingElement constant(RingModelPtr ring, const mpz_class& value);
  static RingElement variable(RingModelPtr ring, std::size_t index);
  static RingElement monomial(RingModelPtr ring, Exponents exps,
                              const mpz_class& coeff = 1);

  const RingModelPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  mpz_class constant_term() const;

  void add_term(const Exponents& exps, const mpz_class& coeff);

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);
  RingElement& operator*=(const mpz_class& scalar);
  RingElement operator-() const;

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const mpz_class& s) { return a *= s; }
  friend RingElement operator*(const mpz_class& s, RingElement a) { return a *= s; }

  bool operator==(const RingElement& other) const;

  /// Negative exponents only for units (±monomials with Laurent support).
  RingElement pow(long exponent) const;
  std::optional<RingElement> inverse() const;

  /// ε: y_i ↦ 0, t_j ↦ 1.
  mpz_class augmentation() const;

  /// Formal partial derivative; the Laurent rule a·t^{a-1} applies to every
  /// exponent sign.
  RingElement derivative(std::size_t var) const;

  /// Largest per-variable exponent spread (max - min) across the terms.
  int exponent_spread() const;

  std::string to_string() const;

 private:
  void check_exponents(const Exponents& exps) const;
  void require_same_ring(const RingElement& other) const;

  RingModelPtr ring_;
  Terms terms_;
};

std::string format_monomial(const RingModel& ring, const Exponents& exps);

/// Coordinates of a - ε(a) in IG/(IG)² against the basis {y_i, t_j - 1}.
struct IndecomposableVector {
  std::vector<mpz_class> coords;
  mpz_class constant_part;

  bool operator==(const IndecomposableVector&) const = default;
};

IndecomposableVector indecomposable_coordinates(const RingElement& a);

/// Ring homomorphism determined by variable images. Laurent variables must
/// map to units.
class RingHom {
 public:
  RingHom(RingModelPtr source, RingModelPtr target, std::vector<RingElement> images);

  const RingModelPtr& source() const noexcept { return source_; }
  const RingModelPtr& target() const noexcept { return target_; }

  RingElement operator()(const RingElement& a) const;
  RingElement apply_monomial(const Exponents& exps) const;

 private:
  RingModelPtr source_;
  RingModelPtr target_;
  std::vector<RingElement> images_;
  std::vector<std::optional<RingElement>> inverses_;
};

}  // namespace kconj
