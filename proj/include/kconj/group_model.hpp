#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kconj/ring.hpp"

namespace kconj {

enum class FactorType { SU, Sp, U };

struct Factor {
  FactorType type;
  int n;

  bool operator==(const Factor&) const = default;
};

inline constexpr int kMaxFactorN = 12;
inline constexpr int kMaxTorusRank = 32;
/// Exterior indices are 64-bit masks; keep well clear of that.
inline constexpr int kMaxRank = 48;

struct GroupDescriptor {
  std::vector<Factor> factors;
  int torus_rank = 0;
  /// The trivial group must be asked for explicitly.
  bool trivial = false;
};

/// Canonical text form, e.g. "SU(3) x Sp(2) x T^2".
std::string to_string(const GroupDescriptor& desc);

/// Grammar: `SU(3) x Sp(2) x U(2) x T^2`, case-insensitive, `x` or `*`
/// separators; `trivial` (or `1`) for the trivial group. A string starting
/// with `{` is read as the JSON form.
GroupDescriptor parse_group_descriptor(std::string_view text);

struct GeneratorInfo {
  std::string name;
  VarKind kind;
  /// Index into descriptor.factors; the torus block uses factors.size().
  std::size_t factor_index;
  /// Which fundamental representation inside the factor (1-based); for
  /// circle coordinates the circle number.
  int fundamental;
  int rep_dimension;
};

class GroupModel {
 public:
  const GroupDescriptor& descriptor() const noexcept { return descriptor_; }
  const std::vector<GeneratorInfo>& generators() const noexcept { return generators_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  std::string name() const { return to_string(descriptor_); }

  /// RG in Hodgkin form: variables in inventory order.
  const RingModelPtr& ring() const noexcept { return ring_; }
  /// RG ⊗ RG: unprimed copy followed by the primed copy.
  const RingModelPtr& doubled_ring() const noexcept { return doubled_; }

  std::size_t generator_index(std::string_view name) const;

  bool operator==(const GroupModel& other) const;

 private:
  friend std::shared_ptr<const GroupModel> build_group(const GroupDescriptor&);
  GroupModel() = default;

  GroupDescriptor descriptor_;
  std::vector<GeneratorInfo> generators_;
  RingModelPtr ring_;
  RingModelPtr doubled_;
};

using GroupPtr = std::shared_ptr<const GroupModel>;

GroupPtr build_group(const GroupDescriptor& desc);
GroupPtr build_group(std::string_view text);

const std::vector<GeneratorInfo>& generator_inventory(const GroupModel& g);

/// Binomial coefficient as a plain integer (small arguments only).
long binomial(int n, int k);

}  // namespace kconj
