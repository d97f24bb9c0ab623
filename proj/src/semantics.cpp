#include "snpneg/semantics.hpp"

#include <sstream>
#include <stdexcept>

namespace snpneg {

namespace {

void require_length(const Database& db, const Interpretation& i) {
  if (i.size() != db.var_count())
    throw std::invalid_argument("interpretation has " + std::to_string(i.size()) + " entries, database has " +
                                std::to_string(db.var_count()) + " variables");
}

bool some_body_atom_true(const Rule& r, const Interpretation& i) {
  for (VarId v : r.body) {
    if (i[v]) return true;
  }
  return false;
}

bool all_body_atoms_true(const Rule& r, const Interpretation& i) {
  for (VarId v : r.body) {
    if (!i[v]) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Direction d) { return d == Direction::down ? "down" : "up"; }

bool is_model(const Database& db, const Interpretation& i) {
  require_length(db, i);
  for (const Rule& r : db.rules()) {
    if (eval(i, r) == 0) return false;
  }
  return true;
}

bool is_f_model(const Database& db, const Interpretation& i) {
  require_length(db, i);
  for (const Rule& r : db.rules()) {
    if (i[r.head] && !some_body_atom_true(r, i)) return false;
  }
  return true;
}

Interpretation failure_operator(const Database& db, const Interpretation& i) {
  require_length(db, i);
  Interpretation out(db.var_count(), true);
  for (const Rule& r : db.rules()) {
    if (!some_body_atom_true(r, i)) out.set(r.head, false);
  }
  return out;
}

Interpretation t_operator(const Database& db, const Interpretation& i) {
  require_length(db, i);
  Interpretation out(db.var_count(), false);
  for (const Rule& r : db.rules()) {
    if (all_body_atoms_true(r, i)) out.set(r.head, true);
  }
  return out;
}

FixpointChain iterate_failure(const Database& db, Direction direction) {
  const std::size_t n = db.var_count();
  FixpointChain chain;
  chain.direction = direction;
  chain.steps.push_back(direction == Direction::down ? Interpretation::bottom(n) : Interpretation::top(n));
  while (true) {
    Interpretation next = failure_operator(db, chain.steps.back());
    if (next == chain.steps.back()) break;
    chain.steps.push_back(std::move(next));
    // Each productive step flips at least one bit monotonically.
    if (chain.steps.size() > n + 1) throw std::logic_error("failure iteration exceeded the lattice height");
  }
  chain.limit = chain.steps.back();
  chain.iterations_to_fixpoint = chain.steps.size() - 1;
  return chain;
}

Interpretation least_model(const Database& db) {
  Interpretation current = Interpretation::bottom(db.var_count());
  while (true) {
    Interpretation next = t_operator(db, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<VarId> cwa_set(const Database& db) { return iterate_failure(db, Direction::up).limit.ones(); }

std::vector<VarId> naf_set(const Database& db) { return iterate_failure(db, Direction::down).limit.ones(); }

std::string render_chain(const FixpointChain& chain) {
  const char* arrow = chain.direction == Direction::down ? "F↓" : "F↑";
  std::ostringstream out;
  for (std::size_t z = 0; z < chain.steps.size(); ++z) out << arrow << z << " = " << chain.steps[z].to_tuple() << '\n';
  out << arrow << "ω = " << chain.limit.to_tuple() << '\n';
  return out.str();
}

std::string render_set(const Database& db, const std::vector<VarId>& vars) {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += db.name(vars[i]);
  }
  out += '}';
  return out;
}

}  // namespace snpneg
