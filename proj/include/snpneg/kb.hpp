#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snpneg/interpretation.hpp"
#include "snpneg/var.hpp"

namespace snpneg {

/// A definite propositional rule `body_1 & ... & body_b -> head`. An empty
/// body is a fact. Duplicate body atoms are kept; they count towards the
/// body size.
struct Rule {
  std::size_t id = 0;  // zero-based, source order
  std::vector<VarId> body;
  VarId head;

  bool operator==(const Rule&) const = default;
};

struct Literal {
  VarId var;
  bool negated = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A finite set of definite rules over the variables p_1..p_n. Immutable once
/// constructed.
class Database {
 public:
  Database() = default;
  /// Throws std::invalid_argument on duplicate names, out-of-range variables,
  /// or rule ids that are not 0..k-1 in order.
  Database(std::vector<std::string> variable_names, std::vector<Rule> rules);

  std::size_t var_count() const { return names_.size(); }
  std::size_t rule_count() const { return rules_.size(); }

  const std::vector<std::string>& variable_names() const { return names_; }
  std::span<const Rule> rules() const { return rules_; }
  const Rule& rule(std::size_t id) const { return rules_.at(id); }

  const std::string& name(VarId v) const { return names_.at(v.index); }
  std::optional<VarId> find(std::string_view name) const;
  /// Like find, but throws std::invalid_argument for unknown names.
  VarId var(std::string_view name) const;

  /// Number of rules with `v` as head (h_v).
  std::size_t head_count(VarId v) const;
  /// Number of body atom occurrences of rule `id` (b_id).
  std::size_t body_size(std::size_t id) const { return rule(id).body.size(); }
  /// Ids of the rules whose head is `v`, in source order.
  std::span<const std::size_t> rules_for(VarId v) const;

  bool operator==(const Database& other) const { return names_ == other.names_ && rules_ == other.rules_; }

 private:
  std::vector<std::string> names_;
  std::vector<Rule> rules_;
  std::unordered_map<std::string, VarId> index_;
  std::vector<std::vector<std::size_t>> by_head_;
};

/// Parses the line-oriented KB syntax:
///
///     # comment
///     vars p1, p2, p3        (optional; fixes the variable order)
///     -> p1.
///     p1 & p2 -> p3.
///
/// Without a `vars` header variables are numbered by first appearance. With a
/// header, every variable used by a rule must be declared in it.
Database parse_kb(std::string_view text);

/// Canonical text form; parse_kb(render_kb(db)) == db.
std::string render_kb(const Database& db);

/// `p1 & p2 -> p3.`
std::string render_rule(const Database& db, const Rule& rule);

int eval(const Interpretation& i, Literal literal);
/// Minimum over the literals; 1 for an empty conjunction.
int eval(const Interpretation& i, std::span<const Literal> conjunction);
/// 0 iff the body holds and the head does not.
int eval(const Interpretation& i, const Rule& rule);

}  // namespace snpneg
