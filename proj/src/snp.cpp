#include "snpneg/snp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace snpneg::snp {

SpikeCondition::SpikeCondition(std::set<SpikeCount> exact, std::vector<Progression> progressions)
    : exact_(std::move(exact)), progressions_(std::move(progressions)) {
  std::sort(progressions_.begin(), progressions_.end());
  progressions_.erase(std::unique(progressions_.begin(), progressions_.end()), progressions_.end());
}

bool SpikeCondition::matches(SpikeCount count) const {
  if (exact_.count(count)) return true;
  for (const Progression& p : progressions_) {
    if (p.period == 0) continue;
    if (count >= p.offset && (count - p.offset) % p.period == 0) return true;
  }
  return false;
}

SnpSystem::SnpSystem(std::vector<Neuron> neurons, std::vector<Synapse> synapses)
    : neurons_(std::move(neurons)), synapses_(std::move(synapses)), out_(neurons_.size()) {
  std::sort(synapses_.begin(), synapses_.end());
  synapses_.erase(std::unique(synapses_.begin(), synapses_.end()), synapses_.end());
  for (const Synapse& s : synapses_) {
    if (s.from < neurons_.size() && s.to < neurons_.size() && s.from != s.to) out_[s.from].push_back(s.to);
  }
}

std::vector<std::string> validate(const SnpSystem& sys) {
  std::vector<std::string> report;
  auto where = [&](std::size_t i) {
    const std::string& label = sys.neuron(i).label;
    return "neuron " + std::to_string(i + 1) + (label.empty() ? "" : " (" + label + ")");
  };
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Neuron& n = sys.neuron(i);
    for (std::size_t r = 0; r < n.firing.size(); ++r) {
      const FiringRule& f = n.firing[r];
      std::string rule = where(i) + " firing rule " + std::to_string(r + 1);
      if (f.consume < 1) report.push_back(rule + ": consumed spikes must be >= 1");
      if (f.emit < 1) report.push_back(rule + ": emitted spikes must be >= 1");
      for (SpikeCount c : f.condition.exact()) {
        if (c < f.consume) report.push_back(rule + ": condition admits " + std::to_string(c) + " < consumed spikes");
      }
      for (const Progression& p : f.condition.progressions()) {
        if (p.period < 1) report.push_back(rule + ": progression period must be >= 1");
        if (p.offset < f.consume)
          report.push_back(rule + ": condition admits " + std::to_string(p.offset) + " < consumed spikes");
      }
      if (f.condition.exact().empty() && f.condition.progressions().empty())
        report.push_back(rule + ": condition is empty");
    }
    for (std::size_t r = 0; r < n.forgetting.size(); ++r) {
      if (n.forgetting[r].threshold < 1)
        report.push_back(where(i) + " forgetting rule " + std::to_string(r + 1) + ": threshold must be >= 1");
    }
  }
  for (const Synapse& s : sys.synapses()) {
    std::string edge = "synapse (" + std::to_string(s.from + 1) + "," + std::to_string(s.to + 1) + ")";
    if (s.from >= sys.size() || s.to >= sys.size()) {
      report.push_back(edge + ": endpoint out of range");
    } else if (s.from == s.to) {
      report.push_back(edge + ": self-loop");
    }
  }
  return report;
}

SpikeCount Configuration::total() const { return std::accumulate(counts.begin(), counts.end(), SpikeCount{0}); }

Configuration initial_configuration(const SnpSystem& sys) {
  Configuration c;
  c.counts.reserve(sys.size());
  for (const Neuron& n : sys.neurons()) c.counts.push_back(n.initial_spikes);
  return c;
}

std::vector<SpikeCount> projection(const Configuration& c, std::size_t n) {
  if (n > c.counts.size()) throw std::out_of_range("projection longer than the configuration");
  return {c.counts.begin(), c.counts.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::string to_string(const Neuron& n, RuleRef r) {
  auto power = [](SpikeCount p) { return p == 1 ? std::string("a") : "a^" + std::to_string(p); };
  if (r.kind == RuleRef::Kind::forgetting) return power(n.forgetting.at(r.index).threshold) + "→λ";
  const FiringRule& f = n.firing.at(r.index);
  std::string lhs;
  const auto& ex = f.condition.exact();
  if (!(ex.size() == 1 && f.condition.progressions().empty() && *ex.begin() == f.consume)) {
    lhs = "{";
    bool first = true;
    for (SpikeCount c : ex) {
      lhs += (first ? "" : ",") + std::to_string(c);
      first = false;
    }
    for (const Progression& p : f.condition.progressions()) {
      lhs += (first ? "" : ",") + std::to_string(p.offset) + "+" + std::to_string(p.period) + "k";
      first = false;
    }
    lhs += "}/";
  }
  return lhs + power(f.consume) + "→" + power(f.emit);
}

std::vector<RuleRef> applicable_rules(const Neuron& neuron, SpikeCount count) {
  std::vector<RuleRef> out;
  for (std::size_t r = 0; r < neuron.firing.size(); ++r) {
    const FiringRule& f = neuron.firing[r];
    if (count >= f.consume && f.condition.matches(count)) out.push_back({RuleRef::Kind::firing, r});
  }
  for (std::size_t r = 0; r < neuron.forgetting.size(); ++r) {
    if (count == neuron.forgetting[r].threshold) out.push_back({RuleRef::Kind::forgetting, r});
  }
  return out;
}

Configuration apply(const SnpSystem& sys, const Configuration& c, const Choices& choices) {
  if (c.counts.size() != sys.size() || choices.size() != sys.size())
    throw std::invalid_argument("configuration or choice vector does not match the system size");
  Configuration next = c;
  std::vector<SpikeCount> delivered(sys.size(), 0);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Neuron& n = sys.neuron(i);
    auto applicable = applicable_rules(n, c.counts[i]);
    const auto& choice = choices[i];
    if (!choice) {
      if (!applicable.empty()) throw std::invalid_argument("neuron " + std::to_string(i + 1) + " must apply a rule");
      continue;
    }
    if (std::find(applicable.begin(), applicable.end(), *choice) == applicable.end()) {
      std::size_t count = choice->kind == RuleRef::Kind::firing ? n.firing.size() : n.forgetting.size();
      std::string rule = choice->index < count ? to_string(n, *choice) : "#" + std::to_string(choice->index + 1);
      throw std::invalid_argument("rule " + rule + " is not applicable in neuron " + std::to_string(i + 1));
    }
    if (choice->kind == RuleRef::Kind::forgetting) {
      next.counts[i] -= n.forgetting[choice->index].threshold;
    } else {
      const FiringRule& f = n.firing[choice->index];
      next.counts[i] -= f.consume;
      for (std::size_t to : sys.successors(i)) delivered[to] += f.emit;
    }
  }
  for (std::size_t i = 0; i < sys.size(); ++i) next.counts[i] += delivered[i];
  return next;
}

NondeterminismError::NondeterminismError(std::size_t neuron, const std::string& message)
    : std::runtime_error(message), neuron_(neuron) {}

namespace {

Choices strict_choices(const SnpSystem& sys, const Configuration& c) {
  Choices choices(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Neuron& n = sys.neuron(i);
    auto applicable = applicable_rules(n, c.counts[i]);
    if (applicable.size() > 1) {
      std::string msg = "neuron " + std::to_string(i + 1) + (n.label.empty() ? "" : " (" + n.label + ")") +
                        " has " + std::to_string(applicable.size()) + " applicable rules with " +
                        std::to_string(c.counts[i]) + " spikes:";
      for (RuleRef r : applicable) msg += " " + to_string(n, r);
      throw NondeterminismError(i, msg);
    }
    if (!applicable.empty()) choices[i] = applicable.front();
  }
  return choices;
}

}  // namespace

std::vector<Transition> successors(const SnpSystem& sys, const Configuration& c) {
  std::vector<std::vector<RuleRef>> options(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) options[i] = applicable_rules(sys.neuron(i), c.counts[i]);

  std::map<Configuration, Choices> found;
  Choices choices(sys.size());
  std::vector<std::size_t> digit(sys.size(), 0);
  // Odometer over the per-neuron option lists; idle neurons have no digit.
  while (true) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      choices[i] = options[i].empty() ? std::nullopt : std::optional<RuleRef>(options[i][digit[i]]);
    }
    Configuration next = apply(sys, c, choices);
    found.emplace(std::move(next), choices);
    std::size_t i = 0;
    for (; i < sys.size(); ++i) {
      if (options[i].size() <= 1) continue;
      if (++digit[i] < options[i].size()) break;
      digit[i] = 0;
    }
    if (i == sys.size()) break;
  }
  std::vector<Transition> out;
  out.reserve(found.size());
  for (auto& [config, ch] : found) out.push_back({config, ch});
  return out;
}

Simulator::Simulator(const SnpSystem& sys, ChoicePolicy policy) : sys_(sys), policy_(policy) {
  if (auto* r = std::get_if<SeededRandom>(&policy_)) rng_.seed(r->seed);
  if (auto* e = std::get_if<Exhaustive>(&policy_); e && e->state_cap == 0)
    throw std::invalid_argument("exhaustive policy requires a positive state cap");
  auto report = validate(sys_);
  if (!report.empty()) throw std::invalid_argument("ill-formed SN P system: " + report.front());
}

std::vector<Transition> Simulator::step(const Configuration& c) {
  if (c.counts.size() != sys_.size()) throw std::invalid_argument("configuration does not match the system size");
  if (std::holds_alternative<Strict>(policy_)) {
    Choices ch = strict_choices(sys_, c);
    return {Transition{apply(sys_, c, ch), ch}};
  }
  if (std::holds_alternative<SeededRandom>(policy_)) {
    Choices ch(sys_.size());
    for (std::size_t i = 0; i < sys_.size(); ++i) {
      auto applicable = applicable_rules(sys_.neuron(i), c.counts[i]);
      if (applicable.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, applicable.size() - 1);
      ch[i] = applicable[applicable.size() == 1 ? 0 : pick(rng_)];
    }
    return {Transition{apply(sys_, c, ch), ch}};
  }
  return successors(sys_, c);
}

Trace Simulator::run(std::size_t steps) {
  return run_until([](const Trace&) { return false; }, steps);
}

Trace Simulator::run_until(const std::function<bool(const Trace&)>& stop, std::size_t max_steps) {
  const auto* exhaustive = std::get_if<Exhaustive>(&policy_);
  Trace trace;
  trace.configurations.push_back(initial_configuration(sys_));
  seen_states_ = 1;
  while (trace.steps() < max_steps && !stop(trace)) {
    auto next = step(trace.configurations.back());
    if (exhaustive) {
      if (next.size() != 1)
        throw NondeterminismError(0, "computation branches into " + std::to_string(next.size()) +
                                         " configurations at step " + std::to_string(trace.steps()) +
                                         "; use explore()");
      if (++seen_states_ > exhaustive->state_cap)
        throw StateCapExceeded("exhaustive state cap of " + std::to_string(exhaustive->state_cap) + " exceeded");
    }
    trace.choices.push_back(std::move(next.front().choices));
    trace.configurations.push_back(std::move(next.front().next));
  }
  return trace;
}

std::vector<std::vector<Configuration>> Simulator::explore(std::size_t steps) {
  const auto* exhaustive = std::get_if<Exhaustive>(&policy_);
  if (!exhaustive) throw std::logic_error("explore requires the exhaustive policy");
  std::vector<std::vector<Configuration>> layers{{initial_configuration(sys_)}};
  seen_states_ = 1;
  for (std::size_t t = 0; t < steps; ++t) {
    std::set<Configuration> next;
    for (const Configuration& c : layers.back()) {
      for (Transition& tr : successors(sys_, c)) next.insert(std::move(tr.next));
    }
    seen_states_ += next.size();
    if (seen_states_ > exhaustive->state_cap)
      throw StateCapExceeded("exhaustive state cap of " + std::to_string(exhaustive->state_cap) + " exceeded");
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

bool replay_matches(const SnpSystem& sys, const Trace& trace) {
  if (trace.configurations.size() != trace.choices.size() + 1) return false;
  if (trace.configurations.front() != initial_configuration(sys)) return false;
  Configuration c = trace.configurations.front();
  for (std::size_t t = 0; t < trace.choices.size(); ++t) {
    try {
      c = apply(sys, c, trace.choices[t]);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (c != trace.configurations[t + 1]) return false;
  }
  return true;
}

}  // namespace snpneg::snp
