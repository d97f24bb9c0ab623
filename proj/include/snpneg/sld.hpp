#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "snpneg/kb.hpp"

namespace snpneg {

/// A goal `B_1, ..., B_m ->`. The empty goal is the empty clause.
using Goal = std::vector<VarId>;

/// Replaces the atom at `position` (zero-based) by the body of `rule`, in
/// place. Throws std::out_of_range / std::invalid_argument when the position
/// is outside the goal or the rule head does not match the selected atom.
Goal resolvent(const Goal& goal, std::size_t position, const Rule& rule);

/// Drops repeated atoms, keeping the first occurrence of each.
Goal factor(const Goal& goal);

enum class SldStatus { finitely_fails, succeeds, diverges, budget_exceeded };

const char* to_string(SldStatus s);

struct DerivationStep {
  std::size_t rule = 0;      // rule id used
  std::size_t position = 0;  // zero-based position of the selected atom
  Goal goal;                 // goal after the step

  bool operator==(const DerivationStep&) const = default;
};

struct DerivationOutcome {
  SldStatus status = SldStatus::budget_exceeded;
  Goal start;
  /// succeeds: a refutation ending in the empty goal (each step is a
  /// resolvent followed by factoring). diverges: a branch whose last goal
  /// repeats an earlier search state.
  std::vector<DerivationStep> derivation;
  /// diverges: index of the first goal of the cycle, counting `start` as 0.
  std::size_t cycle_start = 0;
  /// Distinct search states visited.
  std::size_t explored = 0;
  /// finitely_fails: number of nodes of the finite failed tree.
  std::uint64_t tree_size = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(VarId var, const std::string& name, std::size_t budget);
  VarId var() const { return var_; }

 private:
  VarId var_;
};

/// 2^n * (k + 1), saturating.
std::size_t default_budget(const Database& db);

/// Explores the SLD tree of `db ∪ {atom ->}` under the oldest-atom-first
/// selection rule. Goals are factored, so a search state is the queue of
/// distinct pending atoms; a state repeated along a branch witnesses an
/// infinite derivation.
DerivationOutcome classify(const Database& db, VarId atom, std::size_t budget);

/// Atoms with a finite failed tree. Throws BudgetExceeded naming the first
/// atom whose classification ran out of budget.
std::vector<VarId> failure_set(const Database& db, std::size_t budget);

/// Two-column "Rule used / Goals" rendering of a derivation.
std::string render_derivation(const Database& db, const DerivationOutcome& outcome);

}  // namespace snpneg
