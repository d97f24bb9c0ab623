#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snpneg/kb.hpp"
#include "snpneg/semantics.hpp"

namespace snpneg::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_disagreement = 2, exit_budget = 3 };

enum class Mode { cwa, naf };
enum class Engine { op, sld, snp, all };

struct EngineResult {
  std::string engine;
  std::vector<VarId> negated;
  double millis = 0;
};

struct RunReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Mode mode = Mode::naf;
  std::vector<EngineResult> results;
  bool agreement = true;
};

/// Runs the requested engines; `all` runs every engine applicable to the
/// mode. Throws std::invalid_argument for sld with cwa, BudgetExceeded when
/// the SLD search runs out of budget.
RunReport negate(const Database& db, Mode mode, Engine engine, std::optional<std::size_t> budget = {});

std::string render_report(const Database& db, const RunReport& report, bool timing);
nlohmann::json report_json(const Database& db, const RunReport& report, bool timing);

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err);

struct NegateOptions {
  Mode mode = Mode::naf;
  Engine engine = Engine::all;
  std::optional<std::size_t> budget;
  bool timing = false;
  bool doc = false;
};
int cmd_negate(const std::string& path, const NegateOptions& options, std::ostream& out, std::ostream& err);

struct CompileCommandOptions {
  bool dot = false;
  bool strict_paper = false;
  std::optional<std::string> interpretation;
};
int cmd_compile(const std::string& path, const CompileCommandOptions& options, std::ostream& out, std::ostream& err);

struct TraceOptions {
  Direction direction = Direction::down;
  bool doc = false;
  bool strict_paper = false;
  std::optional<std::size_t> steps;
};
int cmd_trace(const std::string& path, const TraceOptions& options, std::ostream& out, std::ostream& err);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t n_max = 6;
  std::size_t k_max = 10;
  std::optional<std::size_t> budget;
};
int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err);

/// Full command-line entry point (`snpneg <command> ...`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace snpneg::cli
