#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace snpneg {

/// Zero-based index of a propositional variable. Rendered 1-based (p_1..p_n)
/// in every human-facing format.
struct VarId {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const VarId&) const = default;
};

}  // namespace snpneg

template <>
struct std::hash<snpneg::VarId> {
  std::size_t operator()(snpneg::VarId v) const noexcept { return std::hash<std::uint32_t>{}(v.index); }
};
