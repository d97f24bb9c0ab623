#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "snpneg/compile.hpp"
#include "snpneg/generate.hpp"
#include "snpneg/sld.hpp"
#include "snpneg/snp_io.hpp"

namespace snpneg::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Database load(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_kb(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

const char* mode_name(Mode m) { return m == Mode::cwa ? "cwa" : "naf"; }

template <typename F>
EngineResult timed(const char* name, F&& f) {
  auto start = std::chrono::steady_clock::now();
  EngineResult r{name, f(), 0};
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Maps library exceptions onto the exit-code convention.
template <typename F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_budget;
  } catch (const snp::NondeterminismError& e) {
    err << "error: compiled system is nondeterministic: " << e.what() << '\n';
    return exit_disagreement;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
    err << "error: " << e.what() << '\n';
    return exit_disagreement;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace

RunReport negate(const Database& db, Mode mode, Engine engine, std::optional<std::size_t> budget) {
  if (engine == Engine::sld && mode == Mode::cwa)
    throw std::invalid_argument("the sld engine computes finite failure only; use --mode naf");
  RunReport report;
  report.n = db.var_count();
  report.k = db.rule_count();
  report.mode = mode;
  bool all = engine == Engine::all;
  if (all || engine == Engine::op)
    report.results.push_back(timed("operator", [&] { return mode == Mode::cwa ? cwa_set(db) : naf_set(db); }));
  if ((all && mode == Mode::naf) || engine == Engine::sld)
    report.results.push_back(timed("sld", [&] { return failure_set(db, budget.value_or(default_budget(db))); }));
  if (all || engine == Engine::snp)
    report.results.push_back(timed("snp", [&] { return mode == Mode::cwa ? cwa_via_snp(db) : naf_via_snp(db); }));
  for (const EngineResult& r : report.results) {
    if (r.negated != report.results.front().negated) report.agreement = false;
  }
  return report;
}

std::string render_report(const Database& db, const RunReport& report, bool timing) {
  std::ostringstream out;
  out << "database: " << report.n << " variables, " << report.k << " rules\n";
  out << "mode: " << mode_name(report.mode) << '\n';
  for (const EngineResult& r : report.results) {
    out << r.engine << ": " << render_set(db, r.negated);
    if (timing) out << " (" << r.millis << " ms)";
    out << '\n';
  }
  out << "agreement: " << (report.agreement ? "true" : "false") << '\n';
  return out.str();
}

nlohmann::json report_json(const Database& db, const RunReport& report, bool timing) {
  nlohmann::json engines = nlohmann::json::array();
  for (const EngineResult& r : report.results) {
    nlohmann::json names = nlohmann::json::array();
    for (VarId v : r.negated) names.push_back(db.name(v));
    nlohmann::json e{{"engine", r.engine}, {"negated", names}};
    if (timing) e["millis"] = r.millis;
    engines.push_back(e);
  }
  return {{"n", report.n},
          {"k", report.k},
          {"mode", mode_name(report.mode)},
          {"engines", engines},
          {"agreement", report.agreement}};
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  Database db;
  try {
    db = parse_kb(text);
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << '\n';
    out << "definite: no\n";
    return exit_usage;
  }
  out << db.var_count() << " variables, " << db.rule_count() << " rules, definite: yes\n";
  if (db.rule_count() == 0) err << "warning: " << path << " defines no rules\n";
  CompiledSystem compiled = compile(db, Interpretation::bottom(db.var_count()));
  auto report = snp::validate(compiled.system);
  out << "compiled system: " << compiled.layout.size() << " neurons, " << compiled.system.synapses().size()
      << " synapses, " << (report.empty() ? "valid" : "INVALID") << '\n';
  for (const auto& line : report) out << "  " << line << '\n';
  return report.empty() ? exit_ok : exit_usage;
}

int cmd_negate(const std::string& path, const NegateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Database db;
    try {
      db = load(path);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return int{exit_usage};
    }
    RunReport report = negate(db, options.mode, options.engine, options.budget);
    if (options.doc) {
      out << report_json(db, report, options.timing).dump(2) << '\n';
    } else {
      out << render_report(db, report, options.timing);
    }
    return report.agreement ? int{exit_ok} : int{exit_disagreement};
  });
}

int cmd_compile(const std::string& path, const CompileCommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Database db = load(path);
    Interpretation i = options.interpretation ? Interpretation::from_bits(*options.interpretation)
                                              : Interpretation::bottom(db.var_count());
    CompiledSystem compiled = compile(db, i, CompileOptions{options.strict_paper});
    if (options.dot) {
      out << compiled_to_dot(compiled.system, compiled.layout);
    } else {
      nlohmann::json doc{{"system", snp::to_json(compiled.system)},
                         {"layout", to_json(compiled.layout, db)},
                         {"interpretation", i.to_bits()},
                         {"strict_paper", options.strict_paper}};
      out << doc.dump(2) << '\n';
    }
    return int{exit_ok};
  });
}

int cmd_trace(const std::string& path, const TraceOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Database db = load(path);
    CompileOptions copts{options.strict_paper};
    TraceTable table;
    nlohmann::json extra;
    if (options.steps) {
      const std::size_t n = db.var_count();
      Interpretation start = options.direction == Direction::down ? Interpretation::bottom(n) : Interpretation::top(n);
      CompiledSystem compiled = compile(db, start, copts);
      snp::Trace trace = snp::Simulator(compiled.system, snp::Strict{}).run(*options.steps);
      table = make_trace_table(db, compiled, trace, options.direction, trace.configurations.size());
      extra = snp::to_json(compiled.system, trace)["choices"];
    } else {
      SnpIteration it = iterate_via_snp(db, options.direction, copts);
      std::size_t columns = 2 * it.chain.iterations_to_fixpoint + 2;
      table = make_trace_table(db, it.compiled, it.trace, options.direction, columns);
      auto choices = snp::to_json(it.compiled.system, it.trace)["choices"];
      extra = nlohmann::json(choices.begin(), choices.begin() + static_cast<std::ptrdiff_t>(columns - 1));
      if (options.doc) {
        nlohmann::json doc = to_json(table);
        doc["choices"] = extra;
        doc["chain"] = to_json(it.chain);
        doc["simulator_steps"] = it.simulator_steps;
        out << doc.dump(2) << '\n';
        return int{exit_ok};
      }
    }
    if (options.doc) {
      nlohmann::json doc = to_json(table);
      doc["choices"] = extra;
      out << doc.dump(2) << '\n';
    } else {
      out << render_tsv(table);
    }
    return int{exit_ok};
  });
}

int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err) {
  if (options.count < 1 || options.n_max < 1 || options.k_max < 1) {
    err << "error: --count, --n-max and --k-max must be >= 1\n";
    return exit_usage;
  }
  return guarded(err, [&] {
    DatabaseGenerator gen(options.seed, GeneratorBounds{options.n_max, options.k_max, 3});
    for (std::size_t i = 1; i <= options.count; ++i) {
      Database db = gen.next();
      RunReport naf = negate(db, Mode::naf, Engine::all, options.budget);
      RunReport cwa = negate(db, Mode::cwa, Engine::all, options.budget);
      bool nested = std::includes(cwa.results.front().negated.begin(), cwa.results.front().negated.end(),
                                  naf.results.front().negated.begin(), naf.results.front().negated.end());
      out << '#' << i << " n=" << db.var_count() << " k=" << db.rule_count()
          << " naf=" << (naf.agreement ? "agree" : "DISAGREE") << " cwa=" << (cwa.agreement ? "agree" : "DISAGREE")
          << " naf⊆cwa=" << (nested ? "yes" : "NO") << '\n';
      if (!naf.agreement || !cwa.agreement || !nested) {
        out << "\ndisagreement on database #" << i << ":\n"
            << render_report(db, naf, false) << render_report(db, cwa, false) << "\n# offending database\n"
            << render_kb(db);
        return int{exit_disagreement};
      }
    }
    out << options.count << " agreements\n";
    return int{exit_ok};
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logic negation (CWA and negation as finite failure) via failure operator, SLD and SN P engines",
               "snpneg"};
  app.require_subcommand(1);

  std::string path;
  std::string out_file;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_file, "Write output to FILE instead of stdout"); };

  auto* check = app.add_subcommand("check", "Parse and validate a database");
  check->add_option("path", path, "KB file")->required();
  add_out(check);

  NegateOptions nopts;
  std::string format = "text";
  auto* neg = app.add_subcommand("negate", "Compute negated variables");
  neg->add_option("path", path, "KB file")->required();
  neg->add_option("--mode", nopts.mode, "cwa or naf")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Mode>{{"cwa", Mode::cwa}, {"naf", Mode::naf}}));
  neg->add_option("--engine", nopts.engine, "operator, sld, snp or all")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Engine>{
          {"operator", Engine::op}, {"sld", Engine::sld}, {"snp", Engine::snp}, {"all", Engine::all}}));
  neg->add_option("--budget", nopts.budget, "SLD node budget (default 2^n*(k+1))")->check(CLI::PositiveNumber);
  neg->add_option("--format", format, "text or doc")->check(CLI::IsMember({"text", "doc"}));
  neg->add_flag("--timing", nopts.timing, "Report wall time per engine");
  add_out(neg);

  CompileCommandOptions copts;
  std::string emit = "doc";
  std::string interp;
  auto* comp = app.add_subcommand("compile", "Compile a database to an SN P system");
  comp->add_option("path", path, "KB file")->required();
  comp->add_option("--emit", emit, "doc or dot")->check(CLI::IsMember({"doc", "dot"}));
  comp->add_flag("--strict-paper", copts.strict_paper, "Omit the sub-threshold forgetting rules");
  comp->add_option("--interpretation", interp, "Initial interpretation as a bit string (default all zeros)");
  add_out(comp);

  TraceOptions topts;
  std::string tformat = "tsv";
  std::size_t steps = 0;
  auto* tr = app.add_subcommand("trace", "Spike table of the compiled system iterating the failure operator");
  tr->add_option("path", path, "KB file")->required();
  tr->add_option("--direction", topts.direction, "down or up")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Direction>{{"down", Direction::down}, {"up", Direction::up}}));
  tr->add_option("--format", tformat, "tsv or doc")->check(CLI::IsMember({"tsv", "doc"}));
  tr->add_flag("--strict-paper", topts.strict_paper, "Omit the sub-threshold forgetting rules");
  auto* steps_opt = tr->add_option("--steps", steps, "Run a fixed number of steps instead of stopping at the fixpoint");
  add_out(tr);

  FuzzOptions fopts;
  auto* fz = app.add_subcommand("fuzz", "Cross-check all engines on random databases");
  fz->add_option("--seed", fopts.seed, "Generator seed");
  fz->add_option("--count", fopts.count, "Number of databases");
  fz->add_option("--n-max", fopts.n_max, "Maximum variable count");
  fz->add_option("--k-max", fopts.k_max, "Maximum rule count");
  fz->add_option("--budget", fopts.budget, "SLD node budget")->check(CLI::PositiveNumber);
  add_out(fz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::ostringstream buffer;
  int code = exit_ok;
  if (*check) {
    code = cmd_check(path, buffer, err);
  } else if (*neg) {
    nopts.doc = format == "doc";
    code = cmd_negate(path, nopts, buffer, err);
  } else if (*comp) {
    copts.dot = emit == "dot";
    if (!interp.empty()) copts.interpretation = interp;
    code = cmd_compile(path, copts, buffer, err);
  } else if (*tr) {
    topts.doc = tformat == "doc";
    if (*steps_opt) topts.steps = steps;
    code = cmd_trace(path, topts, buffer, err);
  } else if (*fz) {
    code = cmd_fuzz(fopts, buffer, err);
  }

  if (out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << out_file << "'\n";
      return exit_usage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace snpneg::cli
