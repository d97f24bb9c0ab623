#include "snpneg/snp_io.hpp"

#include <sstream>

#include "snpneg/compile.hpp"
#include "snpneg/semantics.hpp"

namespace snpneg {

using nlohmann::json;

namespace snp {

namespace {

json rule_json(const Neuron& n, std::optional<RuleRef> r) {
  if (!r) return nullptr;
  return json{{"kind", r->kind == RuleRef::Kind::firing ? "firing" : "forgetting"},
              {"index", r->index},
              {"rule", to_string(n, *r)}};
}

SpikeCount count_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw std::invalid_argument(std::string("missing or invalid field '") + key + "'");
  return j.at(key).get<SpikeCount>();
}

}  // namespace

json to_json(const SnpSystem& sys) {
  json neurons = json::array();
  for (const Neuron& n : sys.neurons()) {
    json firing = json::array();
    for (const FiringRule& f : n.firing) {
      json progressions = json::array();
      for (const Progression& p : f.condition.progressions()) progressions.push_back({p.offset, p.period});
      firing.push_back({{"exact", f.condition.exact()},
                        {"progressions", progressions},
                        {"consume", f.consume},
                        {"emit", f.emit}});
    }
    json forgetting = json::array();
    for (const ForgettingRule& r : n.forgetting) forgetting.push_back({{"threshold", r.threshold}});
    neurons.push_back(
        {{"label", n.label}, {"initial_spikes", n.initial_spikes}, {"firing", firing}, {"forgetting", forgetting}});
  }
  json synapses = json::array();
  for (const Synapse& s : sys.synapses()) synapses.push_back({s.from + 1, s.to + 1});
  return json{{"neurons", neurons}, {"synapses", synapses}};
}

SnpSystem system_from_json(const json& doc) {
  try {
    std::vector<Neuron> neurons;
    for (const json& jn : doc.at("neurons")) {
      Neuron n;
      n.label = jn.value("label", "");
      n.initial_spikes = count_field(jn, "initial_spikes");
      for (const json& jf : jn.value("firing", json::array())) {
        std::set<SpikeCount> exact;
        for (const json& c : jf.value("exact", json::array())) exact.insert(c.get<SpikeCount>());
        std::vector<Progression> progressions;
        for (const json& p : jf.value("progressions", json::array())) {
          if (!p.is_array() || p.size() != 2) throw std::invalid_argument("progression must be [offset, period]");
          progressions.push_back({p[0].get<SpikeCount>(), p[1].get<SpikeCount>()});
        }
        n.firing.push_back(
            FiringRule{SpikeCondition(std::move(exact), std::move(progressions)), count_field(jf, "consume"),
                       count_field(jf, "emit")});
      }
      for (const json& jf : jn.value("forgetting", json::array()))
        n.forgetting.push_back(ForgettingRule{count_field(jf, "threshold")});
      neurons.push_back(std::move(n));
    }
    std::vector<Synapse> synapses;
    for (const json& s : doc.at("synapses")) {
      if (!s.is_array() || s.size() != 2) throw std::invalid_argument("synapse must be [from, to]");
      auto from = s[0].get<std::size_t>(), to = s[1].get<std::size_t>();
      if (from == 0 || to == 0) throw std::invalid_argument("synapse endpoints are 1-based");
      synapses.push_back({from - 1, to - 1});
    }
    return SnpSystem(std::move(neurons), std::move(synapses));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed SN P system document: ") + e.what());
  }
}

json to_json(const SnpSystem& sys, const Trace& trace) {
  json labels = json::array();
  for (const Neuron& n : sys.neurons()) labels.push_back(n.label);
  json configurations = json::array();
  for (const Configuration& c : trace.configurations) configurations.push_back(c.counts);
  json choices = json::array();
  for (const Choices& step : trace.choices) {
    json row = json::array();
    for (std::size_t i = 0; i < step.size(); ++i) row.push_back(rule_json(sys.neuron(i), step[i]));
    choices.push_back(row);
  }
  return json{{"neurons", labels}, {"configurations", configurations}, {"choices", choices}};
}

std::string to_tsv(const SnpSystem& sys, const Trace& trace) {
  std::ostringstream out;
  out << "neuron";
  for (std::size_t t = 0; t < trace.configurations.size(); ++t) out << "\tC_" << t;
  out << '\n';
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out << sys.neuron(i).label;
    for (const Configuration& c : trace.configurations) out << '\t' << c.counts[i];
    out << '\n';
  }
  return out.str();
}

std::string to_dot(const SnpSystem& sys, const std::function<std::string(std::size_t)>& fill) {
  std::ostringstream out;
  out << "digraph snp {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Neuron& n = sys.neuron(i);
    out << "  n" << i + 1 << " [label=\"" << (n.label.empty() ? std::to_string(i + 1) : n.label) << "\\n"
        << n.initial_spikes;
    for (std::size_t r = 0; r < n.firing.size(); ++r) out << "\\n" << to_string(n, {RuleRef::Kind::firing, r});
    for (std::size_t r = 0; r < n.forgetting.size(); ++r) out << "\\n" << to_string(n, {RuleRef::Kind::forgetting, r});
    out << '"';
    if (fill) out << ", style=filled, fillcolor=\"" << fill(i) << '"';
    out << "];\n";
  }
  for (const Synapse& s : sys.synapses()) out << "  n" << s.from + 1 << " -> n" << s.to + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace snp

json to_json(const NeuronLayout& layout, const Database& db) {
  json neurons = json::array();
  for (std::size_t idx = 0; idx < layout.size(); ++idx) {
    json entry{{"index", idx + 1}, {"label", layout.label(idx)}, {"role", to_string(layout.role(idx))}};
    switch (layout.role(idx)) {
      case NeuronRole::output:
      case NeuronRole::variable:
        entry["source"] = db.name(VarId{static_cast<std::uint32_t>(layout.entity(idx))});
        break;
      case NeuronRole::rule:
        entry["source"] = "R" + std::to_string(layout.entity(idx) + 1);
        entry["rule"] = render_rule(db, db.rule(layout.entity(idx)));
        break;
      case NeuronRole::clock_g: entry["source"] = "G"; break;
      case NeuronRole::clock_t: entry["source"] = "T"; break;
    }
    neurons.push_back(entry);
  }
  return json{{"n", layout.var_count()}, {"k", layout.rule_count()}, {"degree", layout.size()}, {"neurons", neurons}};
}

json to_json(const FixpointChain& chain) {
  json steps = json::array();
  for (const Interpretation& i : chain.steps) steps.push_back(i.to_bits());
  return json{{"direction", to_string(chain.direction)},
              {"steps", steps},
              {"limit", chain.limit.to_bits()},
              {"iterations_to_fixpoint", chain.iterations_to_fixpoint}};
}

json to_json(const TraceTable& table) {
  json rows = json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r)
    rows.push_back({{"label", table.labels[r]}, {"role", table.roles[r]}, {"counts", table.rows[r]}});
  json reading_columns = json::array();
  for (std::size_t c = 1; c < table.columns; c += 2) reading_columns.push_back(c);
  return json{{"direction", to_string(table.direction)},
              {"columns", table.columns},
              {"rows", rows},
              {"reading", {{"rows", table.output_rows}, {"columns", reading_columns}}}};
}

std::string compiled_to_dot(const snp::SnpSystem& sys, const NeuronLayout& layout) {
  return snp::to_dot(sys, [&layout](std::size_t i) -> std::string {
    switch (layout.role(i)) {
      case NeuronRole::output: return "#c6dbef";
      case NeuronRole::variable: return "#c7e9c0";
      case NeuronRole::rule: return "#fdd0a2";
      default: return "#d9d9d9";
    }
  });
}

}  // namespace snpneg
