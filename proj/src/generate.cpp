#include "snpneg/generate.hpp"

#include <stdexcept>

namespace snpneg {

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

}  // namespace

DatabaseGenerator::DatabaseGenerator(std::uint64_t seed, GeneratorBounds bounds) : rng_(seed), bounds_(bounds) {
  if (bounds_.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

Database DatabaseGenerator::next() {
  auto draw = [this](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); };
  std::size_t n = draw(1, bounds_.n_max);
  std::size_t k = draw(0, bounds_.k_max);
  std::vector<Rule> rules;
  for (std::size_t j = 0; j < k; ++j) {
    Rule r;
    r.id = j;
    r.head = VarId{static_cast<std::uint32_t>(draw(0, n - 1))};
    std::size_t b = draw(0, std::min(bounds_.body_max, n));
    for (std::size_t i = 0; i < b; ++i) r.body.push_back(VarId{static_cast<std::uint32_t>(draw(0, n - 1))});
    rules.push_back(std::move(r));
  }
  return Database(names(n), std::move(rules));
}

void enumerate_databases(std::size_t n, std::size_t k_max, const std::function<void(const Database&)>& visit) {
  if (n == 0 || n > 16) throw std::invalid_argument("enumeration supports 1 <= n <= 16");
  std::vector<Rule> kinds;
  for (std::uint32_t head = 0; head < n; ++head) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Rule r;
      r.head = VarId{head};
      for (std::uint32_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) r.body.push_back(VarId{i});
      }
      kinds.push_back(std::move(r));
    }
  }
  const auto var_names = names(n);
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    std::vector<Rule> rules;
    for (std::size_t j = 0; j < pick.size(); ++j) {
      rules.push_back(kinds[pick[j]]);
      rules.back().id = j;
    }
    visit(Database(var_names, std::move(rules)));
    if (pick.size() == k_max) return;
    for (std::size_t t = from; t < kinds.size(); ++t) {
      pick.push_back(t);
      extend(t);
      pick.pop_back();
    }
  };
  extend(0);
}

}  // namespace snpneg
