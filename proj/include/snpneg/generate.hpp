#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "snpneg/kb.hpp"

namespace snpneg {

struct GeneratorBounds {
  std::size_t n_max = 6;
  std::size_t k_max = 10;
  std::size_t body_max = 3;
};

/// Seeded stream of random definite databases over p1..pn with
/// 1 <= n <= n_max and 0 <= k <= k_max. Body atoms are drawn with
/// replacement, so repeated body atoms occur.
class DatabaseGenerator {
 public:
  DatabaseGenerator(std::uint64_t seed, GeneratorBounds bounds);

  Database next();

 private:
  std::mt19937_64 rng_;
  GeneratorBounds bounds_;
};

/// Every database over p1..pn with at most `k_max` rules, bodies taken as
/// sets, rules as a multiset (one representative ordering each).
void enumerate_databases(std::size_t n, std::size_t k_max, const std::function<void(const Database&)>& visit);

}  // namespace snpneg
