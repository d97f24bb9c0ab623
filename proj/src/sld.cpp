#include "snpneg/sld.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>

namespace snpneg {

Goal resolvent(const Goal& goal, std::size_t position, const Rule& rule) {
  if (position >= goal.size()) throw std::out_of_range("selected position outside the goal");
  if (goal[position] != rule.head) throw std::invalid_argument("rule head does not match the selected atom");
  Goal out;
  out.reserve(goal.size() + rule.body.size() - 1);
  out.insert(out.end(), goal.begin(), goal.begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), rule.body.begin(), rule.body.end());
  out.insert(out.end(), goal.begin() + static_cast<std::ptrdiff_t>(position) + 1, goal.end());
  return out;
}

Goal factor(const Goal& goal) {
  Goal out;
  for (VarId v : goal) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

const char* to_string(SldStatus s) {
  switch (s) {
    case SldStatus::finitely_fails: return "FinitelyFails";
    case SldStatus::succeeds: return "Succeeds";
    case SldStatus::diverges: return "Diverges";
    case SldStatus::budget_exceeded: return "BudgetExceeded";
  }
  return "?";
}

BudgetExceeded::BudgetExceeded(VarId var, const std::string& name, std::size_t budget)
    : std::runtime_error("SLD budget of " + std::to_string(budget) + " states exhausted while classifying " + name),
      var_(var) {}

std::size_t default_budget(const Database& db) {
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
  std::size_t n = db.var_count();
  std::size_t pow = n >= 63 ? cap : (std::size_t{1} << n);
  std::size_t k1 = db.rule_count() + 1;
  return pow > cap / k1 ? cap : pow * k1;
}

namespace {

// Pending atoms in selection order (oldest first), without repeats.
using Queue = std::vector<VarId>;

Queue successor(const Queue& q, const Rule& r) {
  Queue next(q.begin() + 1, q.end());
  for (VarId b : r.body) {
    if (std::find(next.begin(), next.end(), b) == next.end()) next.push_back(b);
  }
  return next;
}

enum class Color { grey, black };

struct Node {
  Color color = Color::grey;
  std::uint64_t tree_size = 1;
};

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

struct Frame {
  Queue queue;
  std::size_t next_rule = 0;  // index into rules_for(front)
  std::size_t via_rule = 0;   // rule that produced this frame
};

// Replays rule choices under oldest-first selection with an in-place goal,
// so the displayed goals are genuine resolvents (minus dropped repeats).
std::vector<DerivationStep> replay_fifo(const Database& db, VarId start, const std::vector<std::size_t>& rules) {
  struct Atom {
    VarId var;
    std::size_t age;
  };
  std::vector<Atom> goal{{start, 0}};
  std::vector<DerivationStep> steps;
  std::size_t clock = 0;
  for (std::size_t rid : rules) {
    ++clock;
    std::size_t pos = 0;
    for (std::size_t i = 1; i < goal.size(); ++i) {
      if (goal[i].age < goal[pos].age) pos = i;
    }
    const Rule& r = db.rule(rid);
    std::vector<Atom> next(goal.begin(), goal.begin() + static_cast<std::ptrdiff_t>(pos));
    std::vector<Atom> tail(goal.begin() + static_cast<std::ptrdiff_t>(pos) + 1, goal.end());
    auto present = [&](VarId v) {
      auto has = [v](const Atom& a) { return a.var == v; };
      return std::any_of(next.begin(), next.end(), has) || std::any_of(tail.begin(), tail.end(), has);
    };
    for (VarId b : r.body) {
      if (!present(b)) next.push_back({b, clock});
    }
    next.insert(next.end(), tail.begin(), tail.end());
    goal = std::move(next);
    DerivationStep step{rid, pos, {}};
    for (const Atom& a : goal) step.goal.push_back(a.var);
    steps.push_back(std::move(step));
  }
  return steps;
}

// Shortest refutation over every selection choice. Success does not depend on
// the selection rule, so this yields the most compact witness.
std::vector<DerivationStep> shortest_refutation(const Database& db, VarId start) {
  struct Entry {
    Goal goal;
    std::size_t parent;
    DerivationStep step;
  };
  std::vector<Entry> entries{{Goal{start}, 0, {}}};
  std::map<Goal, bool> seen;
  auto key = [](Goal g) {
    std::sort(g.begin(), g.end());
    return g;
  };
  seen[key(entries[0].goal)] = true;
  for (std::size_t head = 0; head < entries.size(); ++head) {
    Goal goal = entries[head].goal;
    if (goal.empty()) {
      std::vector<DerivationStep> path;
      for (std::size_t at = head; at != 0; at = entries[at].parent) path.push_back(entries[at].step);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t pos = 0; pos < goal.size(); ++pos) {
      for (std::size_t rid : db.rules_for(goal[pos])) {
        Goal next = factor(resolvent(goal, pos, db.rule(rid)));
        auto [it, inserted] = seen.emplace(key(next), true);
        if (!inserted) continue;
        entries.push_back({next, head, DerivationStep{rid, pos, next}});
      }
    }
  }
  return {};
}

}  // namespace

DerivationOutcome classify(const Database& db, VarId atom, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("SLD budget must be positive");
  if (atom.index >= db.var_count()) throw std::invalid_argument("unknown variable index " + std::to_string(atom.index + 1));

  DerivationOutcome out;
  out.start = Goal{atom};

  std::map<Queue, Node> nodes;
  std::vector<Frame> stack;
  bool reaches_empty = false;
  bool cycle_found = false;
  std::vector<std::size_t> cycle_rules;

  nodes.emplace(Queue{atom}, Node{});
  stack.push_back({Queue{atom}, 0, 0});

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.queue.empty()) {
      reaches_empty = true;
      nodes[top.queue].color = Color::black;
      stack.pop_back();
      continue;
    }
    auto candidates = db.rules_for(top.queue.front());
    if (top.next_rule == candidates.size()) {
      Node& node = nodes[top.queue];
      node.color = Color::black;
      std::uint64_t size = 1;
      for (std::size_t rid : candidates) size = saturating_add(size, nodes[successor(top.queue, db.rule(rid))].tree_size);
      node.tree_size = size;
      stack.pop_back();
      continue;
    }
    std::size_t rid = candidates[top.next_rule++];
    Queue next = successor(top.queue, db.rule(rid));
    auto it = nodes.find(next);
    if (it != nodes.end()) {
      if (it->second.color == Color::grey && !cycle_found) {
        cycle_found = true;
        for (std::size_t i = 1; i < stack.size(); ++i) cycle_rules.push_back(stack[i].via_rule);
        cycle_rules.push_back(rid);
        for (std::size_t i = 0; i < stack.size(); ++i) {
          if (stack[i].queue == next) out.cycle_start = i;
        }
      }
      continue;
    }
    if (nodes.size() >= budget) {
      out.status = SldStatus::budget_exceeded;
      out.explored = nodes.size();
      return out;
    }
    nodes.emplace(next, Node{});
    stack.push_back({std::move(next), 0, rid});
  }
  out.explored = nodes.size();

  if (reaches_empty) {
    out.status = SldStatus::succeeds;
    out.derivation = shortest_refutation(db, atom);
  } else if (cycle_found) {
    out.status = SldStatus::diverges;
    out.derivation = replay_fifo(db, atom, cycle_rules);
  } else {
    out.status = SldStatus::finitely_fails;
    out.tree_size = nodes[Queue{atom}].tree_size;
  }
  return out;
}

std::vector<VarId> failure_set(const Database& db, std::size_t budget) {
  std::vector<VarId> out;
  for (std::uint32_t i = 0; i < db.var_count(); ++i) {
    VarId v{i};
    DerivationOutcome r = classify(db, v, budget);
    if (r.status == SldStatus::budget_exceeded) throw BudgetExceeded(v, db.name(v), budget);
    if (r.status == SldStatus::finitely_fails) out.push_back(v);
  }
  return out;
}

namespace {

std::string render_goal(const Database& db, const Goal& g) {
  if (g.empty()) return "□";
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += db.name(g[i]);
  }
  return s + " →";
}

}  // namespace

std::string render_derivation(const Database& db, const DerivationOutcome& outcome) {
  std::ostringstream out;
  auto row = [&](const std::string& rule, const std::string& goal) {
    out << rule;
    for (std::size_t i = rule.size(); i < 11; ++i) out << ' ';
    out << goal << '\n';
  };
  row("Rule used", "Goals");
  row("", render_goal(db, outcome.start));
  for (const DerivationStep& s : outcome.derivation) row("R" + std::to_string(s.rule + 1), render_goal(db, s.goal));
  if (outcome.status == SldStatus::diverges) row("...", "...");
  return out.str();
}

}  // namespace snpneg
