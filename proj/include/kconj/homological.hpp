#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kconj/graded.hpp"
#include "kconj/group_model.hpp"
#include "kconj/ring.hpp"

namespace kconj {

struct MatrixEntry {
  std::size_t row;  // basis index in degree k-1
  std::size_t col;  // basis index in degree k
  RingElement value;
};

/// Chain complex of free modules C_k = ⊕_{|S|=k} R·e_S, k = 0..rank, with
/// homological degree k displayed as -k. The optional augmentation is a ring
/// map out of C_0 = R (multiplication RG⊗RG → RG, or ε: RG → Z).
class FreeComplex {
 public:
  FreeComplex(std::string name, RingModelPtr ring, std::size_t rank);

  const std::string& name() const noexcept { return name_; }
  const RingModelPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<ExteriorIndex>& basis(std::size_t k) const { return basis_.at(k); }

  /// d_k: C_k → C_{k-1}, for 1 <= k <= rank.
  const std::vector<MatrixEntry>& differential(std::size_t k) const { return differentials_.at(k); }
  std::vector<MatrixEntry>& differential(std::size_t k) { return differentials_.at(k); }

  const std::optional<RingHom>& augmentation() const noexcept { return augmentation_; }
  void set_augmentation(RingHom hom);

  /// Largest per-variable exponent spread among differential entries.
  int max_spread() const;

  std::string basis_label(std::size_t k, std::size_t index) const;

 private:
  std::string name_;
  RingModelPtr ring_;
  std::size_t rank_;
  std::vector<std::vector<ExteriorIndex>> basis_;
  std::vector<std::vector<MatrixEntry>> differentials_;
  std::optional<RingHom> augmentation_;
};

/// RG⊗ΛP⊗RG over RG⊗RG: d(e_S) = Σ_{z∈S} (-1)^{pos(z,S)} (γ(z)' - γ(z)) e_{S∖z}
/// with γ(q_i) = y_i, γ(w_j) = t_j - 1; augmented by multiplication.
FreeComplex build_koszul_resolution(const GroupModel& g);

/// ΛP⊗RG over RG: d(e_S) = Σ (-1)^{pos(z,S)} γ(z) e_{S∖z}; augmented by ε.
FreeComplex build_augmentation_resolution(const GroupModel& g);

/// Multiplication RG⊗RG → RG (y_i' ↦ y_i, t_j' ↦ t_j).
RingHom multiplication_map(const GroupModel& g);
/// ε: RG → Z.
RingHom augmentation_map(const GroupModel& g);

/// Applies - ⊗_R S along hom to every differential entry; the result carries
/// no augmentation.
FreeComplex tensor_down(const FreeComplex& c, const RingHom& hom);

/// Test fixture: the same complex with the sign of one differential entry
/// flipped.
FreeComplex corrupt_sign_fixture(const FreeComplex& c, std::size_t degree = 2, std::size_t entry = 0);

struct SquareZeroReport {
  bool ok = true;
  std::size_t compositions_checked = 0;
  std::vector<std::string> nonzero;

  nlohmann::json to_json() const;
};

/// Symbolic check that d_{k-1}∘d_k = 0 for all k and ε∘d_1 = 0.
SquareZeroReport differential_squared_is_zero(const FreeComplex& c);

/// Box of exponents per variable; the padded box extends it by `padding`
/// (never below 0 for polynomial-kind variables).
struct ExponentWindow {
  std::vector<int> lower;
  std::vector<int> upper;
  int padding = 1;

  /// Polynomial variables in [0, bound], Laurent variables in [-bound, bound].
  static ExponentWindow uniform(const RingModel& ring, int bound, int padding = 1);

  ExponentWindow padded(const RingModel& ring) const;
  std::size_t monomial_count() const;
  bool contains(const Exponents& e) const;
  nlohmann::json to_json() const;
};

struct WindowOptions {
  /// Use the augmentation as d_0 when the complex has one.
  bool use_augmentation = true;
  bool compute_torsion = true;
  /// Blocks above this many rows or columns are skipped by the torsion pass.
  std::size_t torsion_block_limit = 64;
  unsigned threads = 1;
};

struct HomologyReport {
  std::string complex;
  int degree = 0;
  ExponentWindow inner_window;
  int padding = 0;
  std::size_t cells = 0;            // |window| · rank C_k
  std::size_t image_rank = 0;       // rank of d_k on windowed chains
  std::size_t rank_cycles = 0;      // windowed cycles
  std::size_t rank_boundaries = 0;  // boundaries from the padded window lying in the window
  long deficit = 0;
  bool augmented = false;
  std::vector<mpz_class> torsion;   // non-unit invariant factors found
  bool torsion_complete = true;
  std::size_t components = 0;

  nlohmann::json to_json() const;
};

/// Exactness certificate at degree k on a finite exponent window; deficit 0
/// means every cycle supported in the window bounds a chain supported in the
/// padded window.
HomologyReport window_homology(const FreeComplex& c, const ExponentWindow& w, int degree,
                               const WindowOptions& options = {});

struct TorTable {
  std::size_t rank = 0;
  /// Tor^{RG⊗RG}_{-k}(RG, RG): rank over RG.
  std::vector<long> bimodule;
  /// Tor^{RG}_{-k}(Z, Z): rank over Z.
  std::vector<long> augmentation;
  std::size_t checked_degrees = 0;
  bool cross_checked = true;
  std::vector<std::string> mismatches;

  nlohmann::json to_json() const;
};

/// Rank tables from the tensored-down complexes (both have zero
/// differential); degrees up to check_degrees are cross-checked against
/// window_homology.
TorTable tor_ranks(const GroupModel& g, std::size_t check_degrees = 2, int window_bound = 1);

/// The change of variables behind regularity of the Koszul sequence:
/// y' - y is a coordinate, t' - t = t·(s - 1) with s = t'/t a unit.
struct RegularityStep {
  std::string generator;
  std::string element;
  std::string rewrite;
  bool verified = false;
};

std::vector<RegularityStep> regular_sequence_certificate(const GroupModel& g);

}  // namespace kconj
