#pragma once

#include <string>
#include <vector>

#include "snpneg/interpretation.hpp"
#include "snpneg/kb.hpp"

namespace snpneg {

enum class Direction { down, up };

const char* to_string(Direction d);

/// Iterates of the failure operator from the bottom (down) or top (up)
/// interpretation. `steps[z]` is the z-th iterate; the list stops at the
/// first iterate that the operator maps to itself, so `limit == steps.back()`
/// and `iterations_to_fixpoint == steps.size() - 1` counts the productive
/// applications.
struct FixpointChain {
  Direction direction = Direction::down;
  std::vector<Interpretation> steps;
  Interpretation limit;
  std::size_t iterations_to_fixpoint = 0;

  bool operator==(const FixpointChain&) const = default;
};

bool is_model(const Database& db, const Interpretation& i);
bool is_f_model(const Database& db, const Interpretation& i);

/// F(I)(p) = 1 iff every rule with head p has a body atom true under I. The
/// maximum over an empty body is 0, so fact heads always map to 0; variables
/// heading no rule always map to 1.
Interpretation failure_operator(const Database& db, const Interpretation& i);

/// Immediate consequence operator: T(I)(p) = 1 iff some rule with head p has
/// its whole body true under I (empty body counts as true).
Interpretation t_operator(const Database& db, const Interpretation& i);

FixpointChain iterate_failure(const Database& db, Direction direction);

/// Least model, as the limit of T iterated from the bottom interpretation.
Interpretation least_model(const Database& db);

/// Variables p with F-up-omega(p) = 1: the negations inferred by the closed
/// world assumption.
std::vector<VarId> cwa_set(const Database& db);
/// Variables p with F-down-omega(p) = 1: the finite failure set.
std::vector<VarId> naf_set(const Database& db);

/// One iterate per line, `F↓0 = (0,0,...)`, followed by the limit line.
std::string render_chain(const FixpointChain& chain);
/// `{p4, p5}`
std::string render_set(const Database& db, const std::vector<VarId>& vars);

}  // namespace snpneg
