#include "kconj/graded.hpp"

namespace kconj {

std::vector<std::size_t> ExteriorIndex::elements() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

int ExteriorIndex::position(std::size_t i) const noexcept {
  if (!contains(i)) return -1;
  return std::popcount(bits & ((std::uint64_t{1} << i) - 1));
}

bool ExteriorIndex::operator<(const ExteriorIndex& o) const noexcept {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  std::uint64_t diff = bits ^ o.bits;
  if (diff == 0) return false;
  // The smaller ascending list is the one owning the lowest differing element.
  return (bits & diff & (~diff + 1)) != 0;
}

int wedge_sign(ExteriorIndex s, ExteriorIndex t) noexcept {
  if (s.bits & t.bits) return 0;
  int inversions = 0;
  for (std::uint64_t b = t.bits; b; b &= b - 1) {
    int i = std::countr_zero(b);
    std::uint64_t above = i >= 63 ? 0 : ~((std::uint64_t{1} << (i + 1)) - 1);
    inversions += std::popcount(s.bits & above);
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<ExteriorIndex> exterior_basis(std::size_t r, std::size_t k) {
  std::vector<ExteriorIndex> out;
  if (k > r) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    ExteriorIndex s;
    for (std::size_t i : pick) s.bits |= std::uint64_t{1} << i;
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

void IntegralClass::add_component(ExteriorIndex s, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = components_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) components_.erase(it);
  }
}

IntegralClass operator*(const IntegralClass& a, const IntegralClass& b) {
  if (!(*a.group_ == *b.group_)) throw GroupMismatch("group mismatch in exterior product");
  IntegralClass r(a.group_);
  for (const auto& [s, cs] : a.components_)
    for (const auto& [t, ct] : b.components_) {
      int sign = wedge_sign(s, t);
      if (sign != 0) r.add_component({s.bits | t.bits}, sign * cs * ct);
    }
  return r;
}

namespace {
struct BetaNames {
  static std::string symbol(const std::string& g) { return "b[" + g + "]"; }
};
}  // namespace

std::string IntegralClass::to_string() const {
  if (components_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : components_) {
    mpz_class mag = abs(c);
    std::string body;
    if (s.bits == 0)
      body = mag.get_str();
    else if (mag == 1)
      body = exterior_name<BetaNames>(*group_, s);
    else
      body = mag.get_str() + " " + exterior_name<BetaNames>(*group_, s);
    if (first)
      out += c < 0 ? "-" + body : body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace kconj
