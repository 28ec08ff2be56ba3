#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kconj/group_model.hpp"
#include "kconj/ring.hpp"

namespace kconj {

enum class BlockKind { SU, Sp, U, Circle };

/// One factor's variables on the maximal torus. An SU(n) block stores n-1
/// variables: x_n is eliminated through x_1⋯x_n = 1.
struct TorusBlock {
  BlockKind kind;
  int n;
  std::size_t factor_index;
  std::size_t offset;
  std::size_t width;
};

class TorusModel {
 public:
  explicit TorusModel(const GroupModel& g);

  const std::vector<TorusBlock>& blocks() const noexcept { return blocks_; }
  /// All-Laurent ring on the variables x<f>_<k>.
  const RingModelPtr& ring() const noexcept { return ring_; }
  const std::string& group_name() const noexcept { return group_name_; }

 private:
  std::vector<TorusBlock> blocks_;
  RingModelPtr ring_;
  std::string group_name_;
};

using TorusModelPtr = std::shared_ptr<const TorusModel>;

TorusModelPtr torus_model(const GroupModel& g);

/// A Laurent polynomial on the maximal torus, meant to be invariant under the
/// Weyl group of each block (permutations, plus inversions for Sp).
class SymmetricLaurent {
 public:
  SymmetricLaurent(TorusModelPtr torus, RingElement poly);

  const TorusModelPtr& torus() const noexcept { return torus_; }
  const RingElement& poly() const noexcept { return poly_; }

  bool is_weyl_invariant() const;
  /// Value at the identity element (every torus variable set to 1).
  mpz_class eval_at_identity() const;

  SymmetricLaurent operator+(const SymmetricLaurent& o) const;
  SymmetricLaurent operator-(const SymmetricLaurent& o) const;
  SymmetricLaurent operator*(const SymmetricLaurent& o) const;
  bool operator==(const SymmetricLaurent& o) const { return poly_ == o.poly_; }

  std::string to_string() const { return poly_.to_string(); }

 private:
  TorusModelPtr torus_;
  RingElement poly_;
};

SymmetricLaurent parse_character(std::string_view text, const TorusModelPtr& torus);

/// Character of the representation behind a Hodgkin generator: e_k for
/// SU/U, the k-th fundamental Sp(n) module, or a circle coordinate.
SymmetricLaurent fundamental_character(const GroupModel& g, const GeneratorInfo& gen);

/// Substitutes y_i ↦ χ(λ_i) - dim λ_i and t_j ↦ χ(t_j).
SymmetricLaurent to_character(const RingElement& a, const GroupModel& g);

/// Inverse of to_character by leading-term elimination against products of
/// fundamental characters. Throws NotWeylInvariant for non-invariant input.
RingElement from_character(const SymmetricLaurent& s, const GroupModel& g);

}  // namespace kconj
