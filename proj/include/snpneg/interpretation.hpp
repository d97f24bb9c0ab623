#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "snpneg/var.hpp"

namespace snpneg {

/// A total assignment of {0,1} to the variables p_1..p_n.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}
  explicit Interpretation(std::vector<std::uint8_t> bits);

  static Interpretation bottom(std::size_t n) { return Interpretation(n, false); }
  static Interpretation top(std::size_t n) { return Interpretation(n, true); }

  /// Parses the bit-string form `0101...`, p_1 leftmost.
  static Interpretation from_bits(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](VarId v) const { return bits_[v.index] != 0; }
  bool at(std::size_t i) const;
  void set(VarId v, bool value);

  std::size_t count() const;
  std::vector<VarId> ones() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// `0101...`
  std::string to_bits() const;
  /// `(0,1,0,1)`
  std::string to_tuple() const;

  bool operator==(const Interpretation&) const = default;
  auto operator<=>(const Interpretation&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Componentwise implication: a(p)=1 implies b(p)=1.
bool leq(const Interpretation& a, const Interpretation& b);
/// Componentwise max.
Interpretation unite(const Interpretation& a, const Interpretation& b);
/// Componentwise min.
Interpretation intersect(const Interpretation& a, const Interpretation& b);

}  // namespace snpneg
