#include "snpneg/compile.hpp"

#include <sstream>
#include <stdexcept>

#include "snpneg/snp_io.hpp"

namespace snpneg {

using snp::FiringRule;
using snp::ForgettingRule;
using snp::Neuron;
using snp::SpikeCondition;
using snp::SpikeCount;
using snp::Synapse;

const char* to_string(NeuronRole role) {
  switch (role) {
    case NeuronRole::output: return "output";
    case NeuronRole::variable: return "variable";
    case NeuronRole::rule: return "rule";
    case NeuronRole::clock_g: return "clock";
    case NeuronRole::clock_t: return "clock";
  }
  return "?";
}

NeuronRole NeuronLayout::role(std::size_t neuron) const {
  if (neuron < n_) return NeuronRole::output;
  if (neuron < 2 * n_) return NeuronRole::variable;
  if (neuron < 2 * n_ + k_) return NeuronRole::rule;
  if (neuron == clock_g()) return NeuronRole::clock_g;
  if (neuron == clock_t()) return NeuronRole::clock_t;
  throw std::out_of_range("neuron index outside the layout");
}

std::size_t NeuronLayout::entity(std::size_t neuron) const {
  switch (role(neuron)) {
    case NeuronRole::output: return neuron;
    case NeuronRole::variable: return neuron - n_;
    case NeuronRole::rule: return neuron - 2 * n_;
    default: return 0;
  }
}

std::string NeuronLayout::label(std::size_t neuron) const {
  switch (role(neuron)) {
    case NeuronRole::clock_g: return "σ_G";
    case NeuronRole::clock_t: return "σ_T";
    default: return "σ_" + std::to_string(neuron + 1);
  }
}

std::string NeuronLayout::describe(std::size_t neuron, const Database& db) const {
  switch (role(neuron)) {
    case NeuronRole::output: return "output:" + db.name(VarId{static_cast<std::uint32_t>(entity(neuron))});
    case NeuronRole::variable: return "variable:" + db.name(VarId{static_cast<std::uint32_t>(entity(neuron))});
    case NeuronRole::rule: return "rule:R" + std::to_string(entity(neuron) + 1);
    case NeuronRole::clock_g: return "clock:G";
    case NeuronRole::clock_t: return "clock:T";
  }
  return "?";
}

namespace {

void require_length(const Database& db, const Interpretation& i) {
  if (i.size() != db.var_count())
    throw std::invalid_argument("interpretation has " + std::to_string(i.size()) + " entries, database has " +
                                std::to_string(db.var_count()) + " variables");
}

FiringRule exact_rule(SpikeCount count) { return FiringRule{SpikeCondition::exactly(count), count, 1}; }

}  // namespace

std::vector<SpikeCount> encode_interpretation(const Database& db, const Interpretation& i) {
  require_length(db, i);
  NeuronLayout layout(db.var_count(), db.rule_count());
  std::vector<SpikeCount> counts(layout.size(), 0);
  for (std::uint32_t j = 0; j < db.var_count(); ++j) {
    VarId v{j};
    std::size_t h = db.head_count(v);
    counts[layout.variable(v)] = i[v] ? (h == 0 ? 1 : h) : 0;
  }
  counts[layout.clock_g()] = 1;
  return counts;
}

CompiledSystem compile(const Database& db, const Interpretation& i, CompileOptions options) {
  const std::size_t n = db.var_count();
  const std::size_t k = db.rule_count();
  NeuronLayout layout(n, k);
  std::vector<SpikeCount> initial = encode_interpretation(db, i);

  std::vector<Neuron> neurons(layout.size());
  std::vector<Synapse> synapses;
  for (std::size_t idx = 0; idx < layout.size(); ++idx) {
    neurons[idx].label = layout.label(idx);
    neurons[idx].initial_spikes = initial[idx];
  }

  for (std::uint32_t j = 0; j < n; ++j) {
    VarId v{j};
    neurons[layout.output(v)].forgetting.push_back(ForgettingRule{1});

    Neuron& var = neurons[layout.variable(v)];
    std::size_t h = db.head_count(v);
    if (h == 0) {
      var.firing.push_back(exact_rule(1));
      synapses.push_back({layout.clock_t(), layout.variable(v)});
    } else {
      var.firing.push_back(exact_rule(h));
      if (!options.strict_paper) {
        for (std::size_t l = 1; l < h; ++l) var.forgetting.push_back(ForgettingRule{l});
      }
    }
    synapses.push_back({layout.variable(v), layout.output(v)});
  }

  for (const Rule& r : db.rules()) {
    Neuron& neuron = neurons[layout.rule(r.id)];
    for (std::size_t l = 1; l <= r.body.size(); ++l) neuron.firing.push_back(exact_rule(l));
    for (VarId b : r.body) synapses.push_back({layout.variable(b), layout.rule(r.id)});
    synapses.push_back({layout.rule(r.id), layout.variable(r.head)});
  }

  neurons[layout.clock_g()].firing.push_back(exact_rule(1));
  neurons[layout.clock_t()].firing.push_back(exact_rule(1));
  synapses.push_back({layout.clock_g(), layout.clock_t()});
  synapses.push_back({layout.clock_t(), layout.clock_g()});

  return CompiledSystem{snp::SnpSystem(std::move(neurons), std::move(synapses)), layout};
}

Interpretation read_outputs(const NeuronLayout& layout, const snp::Configuration& c) {
  auto counts = snp::projection(c, layout.var_count());
  std::vector<std::uint8_t> bits(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] > 1)
      throw std::logic_error("output neuron " + layout.label(j) + " holds " + std::to_string(counts[j]) + " spikes");
    bits[j] = static_cast<std::uint8_t>(counts[j]);
  }
  return Interpretation(std::move(bits));
}

Interpretation failure_via_snp(const Database& db, const Interpretation& i, CompileOptions options) {
  CompiledSystem compiled = compile(db, i, options);
  snp::Simulator sim(compiled.system, snp::Strict{});
  snp::Trace trace = sim.run(3);
  return read_outputs(compiled.layout, trace.configurations[3]);
}

SnpIteration iterate_via_snp(const Database& db, Direction direction, CompileOptions options) {
  const std::size_t n = db.var_count();
  Interpretation start = direction == Direction::down ? Interpretation::bottom(n) : Interpretation::top(n);
  SnpIteration out{{}, {}, compile(db, start, options), 0};
  const NeuronLayout& layout = out.compiled.layout;

  auto converged = [&](const snp::Trace& t) {
    std::size_t s = t.steps();
    return s >= 3 && s % 2 == 1 &&
           snp::projection(t.configurations[s], n) == snp::projection(t.configurations[s - 2], n);
  };
  const std::size_t cap = 2 * (n + 2) + 1;
  snp::Simulator sim(out.compiled.system, snp::Strict{});
  out.trace = sim.run_until(converged, cap);
  if (!converged(out.trace)) throw std::logic_error("compiled network reached no fixpoint within n+2 cycles");
  out.simulator_steps = out.trace.steps();

  out.chain.direction = direction;
  for (std::size_t t = 1; t + 2 <= out.simulator_steps; t += 2)
    out.chain.steps.push_back(read_outputs(layout, out.trace.configurations[t]));
  out.chain.limit = out.chain.steps.back();
  out.chain.iterations_to_fixpoint = out.chain.steps.size() - 1;
  return out;
}

std::vector<VarId> cwa_via_snp(const Database& db) { return iterate_via_snp(db, Direction::up).chain.limit.ones(); }

std::vector<VarId> naf_via_snp(const Database& db) { return iterate_via_snp(db, Direction::down).chain.limit.ones(); }

TraceTable make_trace_table(const Database& db, const CompiledSystem& compiled, const snp::Trace& trace,
                            Direction direction, std::size_t columns) {
  if (columns > trace.configurations.size()) throw std::out_of_range("table wider than the trace");
  const NeuronLayout& layout = compiled.layout;
  TraceTable table;
  table.direction = direction;
  table.columns = columns;
  table.output_rows = layout.var_count();
  for (std::size_t idx = 0; idx < layout.size(); ++idx) {
    table.labels.push_back(layout.label(idx));
    table.roles.push_back(layout.describe(idx, db));
    std::vector<SpikeCount> row;
    for (std::size_t c = 0; c < columns; ++c) row.push_back(trace.configurations[c].counts[idx]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

TraceTable trace_table(const Database& db, Direction direction, CompileOptions options) {
  SnpIteration it = iterate_via_snp(db, direction, options);
  return make_trace_table(db, it.compiled, it.trace, direction, 2 * it.chain.iterations_to_fixpoint + 2);
}

std::string render_tsv(const TraceTable& table) {
  std::ostringstream out;
  out << "# " << (table.direction == Direction::down ? "F↓ω" : "F↑ω") << ": rows σ_1..σ_" << table.output_rows
      << " at odd columns encode the failure-operator iterates\n";
  out << "neuron\trole";
  for (std::size_t c = 0; c < table.columns; ++c) out << "\tC_" << c;
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << table.labels[r] << '\t' << table.roles[r];
    for (SpikeCount v : table.rows[r]) out << '\t' << v;
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> check_structural_lemmas(const NeuronLayout& layout, const Database& db,
                                                 const snp::Trace& trace) {
  std::vector<std::string> out;
  auto fail = [&](std::size_t t, std::size_t neuron, const std::string& what) {
    out.push_back("C_" + std::to_string(t) + " " + layout.label(neuron) + ": " + what);
  };
  for (std::size_t t = 0; t < trace.configurations.size(); ++t) {
    const auto& c = trace.configurations[t].counts;
    if (c.size() != layout.size()) {
      out.push_back("C_" + std::to_string(t) + ": configuration size does not match the layout");
      continue;
    }
    bool even = t % 2 == 0;
    if (c[layout.clock_g()] != (even ? 1u : 0u)) fail(t, layout.clock_g(), "clock G out of phase");
    if (c[layout.clock_t()] != (even ? 0u : 1u)) fail(t, layout.clock_t(), "clock T out of phase");
    for (std::size_t idx = 0; idx < layout.size(); ++idx) {
      NeuronRole role = layout.role(idx);
      if (even && role == NeuronRole::rule && c[idx] != 0) fail(t, idx, "rule neuron not empty at even step");
      if (even && role == NeuronRole::output && c[idx] != 0) fail(t, idx, "output neuron not empty at even step");
      if (!even && role == NeuronRole::variable && c[idx] != 0) fail(t, idx, "variable neuron not empty at odd step");
    }
  }
  for (std::size_t t = 0; t < trace.choices.size(); ++t) {
    for (const Rule& r : db.rules()) {
      if (r.body.empty() && trace.choices[t].at(layout.rule(r.id))) fail(t, layout.rule(r.id), "fact neuron fired");
    }
  }
  return out;
}

}  // namespace snpneg
