#include "snpneg/kb.hpp"

#include <cctype>
#include <sstream>

namespace snpneg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Database::Database(std::vector<std::string> variable_names, std::vector<Rule> rules)
    : names_(std::move(variable_names)), rules_(std::move(rules)), by_head_(names_.size()) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    auto [it, inserted] = index_.emplace(names_[i], VarId{static_cast<std::uint32_t>(i)});
    if (!inserted) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
  }
  auto check = [&](VarId v) {
    if (v.index >= names_.size()) throw std::invalid_argument("rule references an undeclared variable");
  };
  for (std::size_t j = 0; j < rules_.size(); ++j) {
    const Rule& r = rules_[j];
    if (r.id != j) throw std::invalid_argument("rule ids must be contiguous in source order");
    check(r.head);
    for (VarId b : r.body) check(b);
    by_head_[r.head.index].push_back(j);
  }
}

std::optional<VarId> Database::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarId Database::var(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::size_t Database::head_count(VarId v) const {
  if (v.index >= names_.size()) throw std::invalid_argument("unknown variable index " + std::to_string(v.index + 1));
  return by_head_[v.index].size();
}

std::span<const std::size_t> Database::rules_for(VarId v) const {
  if (v.index >= names_.size()) throw std::invalid_argument("unknown variable index " + std::to_string(v.index + 1));
  return by_head_[v.index];
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Database parse() {
    skip_space(true);
    if (peek_word() == "vars") parse_header();
    while (true) {
      skip_space(true);
      if (at_end()) break;
      parse_rule();
    }
    return Database(std::move(names_), std::move(rules_));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

  // Skips blanks and comments; stops at a newline unless `newlines` is set.
  void skip_space(bool newlines) {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '\n') {
        if (!newlines) return;
        advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view peek_word() const {
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  std::string identifier(const char* what) {
    if (!ident_start(peek())) fail(std::string("expected ") + what);
    std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) advance();
    std::string name(text_.substr(start, pos_ - start));
    if (name == "vars") fail("'vars' is reserved and may only start the header");
    return name;
  }

  void parse_header() {
    for (int i = 0; i < 4; ++i) advance();
    header_ = true;
    while (true) {
      skip_space(false);
      std::size_t line = line_, col = col_;
      std::string name = identifier("variable name in vars header");
      if (declared_.count(name)) throw ParseError(line, col, "variable '" + name + "' declared twice");
      declare(name);
      skip_space(false);
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == '.') advance();
      skip_space(false);
      if (!at_end() && peek() != '\n') fail("expected ',' or end of line in vars header");
      return;
    }
  }

  VarId declare(const std::string& name) {
    auto id = VarId{static_cast<std::uint32_t>(names_.size())};
    declared_.emplace(name, id);
    names_.push_back(name);
    return id;
  }

  VarId use(std::size_t line, std::size_t col, const std::string& name) {
    if (auto it = declared_.find(name); it != declared_.end()) return it->second;
    if (header_) throw ParseError(line, col, "variable '" + name + "' is not declared in the vars header");
    return declare(name);
  }

  VarId atom(const char* what) {
    skip_space(true);
    if (peek() == '~') {
      fail("negative literal '~' is not supported: only definite databases (positive rule bodies) are accepted");
    }
    std::size_t line = line_, col = col_;
    std::string name = identifier(what);
    return use(line, col, name);
  }

  bool arrow_next() const { return pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>'; }

  void parse_rule() {
    Rule rule;
    rule.id = rules_.size();
    skip_space(true);
    if (!arrow_next()) {
      rule.body.push_back(atom("variable or '->'"));
      while (true) {
        skip_space(true);
        if (peek() == '&') {
          advance();
          rule.body.push_back(atom("variable after '&'"));
        } else {
          break;
        }
      }
      if (!arrow_next()) fail("expected '&' or '->'");
    }
    advance();
    advance();
    rule.head = atom("head variable after '->'");
    skip_space(true);
    if (peek() != '.') fail("expected '.' at end of rule");
    advance();
    rules_.push_back(std::move(rule));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  bool header_ = false;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> declared_;
  std::vector<Rule> rules_;
};

}  // namespace

Database parse_kb(std::string_view text) { return Parser(text).parse(); }

std::string render_rule(const Database& db, const Rule& rule) {
  std::string out;
  for (std::size_t i = 0; i < rule.body.size(); ++i) {
    if (i) out += " & ";
    out += db.name(rule.body[i]);
  }
  out += rule.body.empty() ? "-> " : " -> ";
  out += db.name(rule.head);
  out += '.';
  return out;
}

std::string render_kb(const Database& db) {
  std::ostringstream out;
  if (db.var_count() > 0) {
    out << "vars ";
    for (std::size_t i = 0; i < db.var_count(); ++i) out << (i ? ", " : "") << db.variable_names()[i];
    out << '\n';
  }
  for (const Rule& r : db.rules()) out << render_rule(db, r) << '\n';
  return out.str();
}

int eval(const Interpretation& i, Literal literal) {
  bool v = i.at(literal.var.index);
  return (literal.negated ? !v : v) ? 1 : 0;
}

int eval(const Interpretation& i, std::span<const Literal> conjunction) {
  int m = 1;
  for (const Literal& l : conjunction) m = std::min(m, eval(i, l));
  return m;
}

int eval(const Interpretation& i, const Rule& rule) {
  int body = 1;
  for (VarId v : rule.body) body = std::min(body, i.at(v.index) ? 1 : 0);
  int head = i.at(rule.head.index) ? 1 : 0;
  return (body == 1 && head == 0) ? 0 : 1;
}

}  // namespace snpneg
