#include "snpneg/interpretation.hpp"

#include <algorithm>
#include <stdexcept>

namespace snpneg {

namespace {

void require_same_length(const Interpretation& a, const Interpretation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("interpretation length mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

}  // namespace

Interpretation::Interpretation(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw std::invalid_argument("interpretation entries must be 0 or 1");
  }
}

Interpretation Interpretation::from_bits(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may only contain '0' and '1'");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return Interpretation(std::move(bits));
}

bool Interpretation::at(std::size_t i) const {
  if (i >= bits_.size()) throw std::out_of_range("variable index out of range");
  return bits_[i] != 0;
}

void Interpretation::set(VarId v, bool value) {
  if (v.index >= bits_.size()) throw std::out_of_range("variable index out of range");
  bits_[v.index] = value ? 1 : 0;
}

std::size_t Interpretation::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<VarId> Interpretation::ones() const {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(VarId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::string Interpretation::to_bits() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::string Interpretation::to_tuple() const {
  std::string s = "(";
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i) s.push_back(',');
    s.push_back(bits_[i] ? '1' : '0');
  }
  s.push_back(')');
  return s;
}

bool leq(const Interpretation& a, const Interpretation& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.bits()[i] && !b.bits()[i]) return false;
  }
  return true;
}

Interpretation unite(const Interpretation& a, const Interpretation& b) {
  require_same_length(a, b);
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a.bits()[i], b.bits()[i]);
  return Interpretation(std::move(out));
}

Interpretation intersect(const Interpretation& a, const Interpretation& b) {
  require_same_length(a, b);
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a.bits()[i], b.bits()[i]);
  return Interpretation(std::move(out));
}

}  // namespace snpneg
