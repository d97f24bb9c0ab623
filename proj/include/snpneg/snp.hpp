#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace snpneg::snp {

using SpikeCount = std::uint64_t;

/// Counts c with c >= offset and (c - offset) divisible by period.
struct Progression {
  SpikeCount offset = 0;
  SpikeCount period = 1;

  auto operator<=>(const Progression&) const = default;
};

/// The language of a regular expression over the single spike symbol, kept as
/// an ultimately periodic set: a finite set of exact counts plus arithmetic
/// progressions.
class SpikeCondition {
 public:
  SpikeCondition() = default;
  SpikeCondition(std::set<SpikeCount> exact, std::vector<Progression> progressions);

  /// {c}: the abbreviated rule form a^c -> a^q.
  static SpikeCondition exactly(SpikeCount c) { return SpikeCondition({c}, {}); }
  /// {c, c+1, ...}
  static SpikeCondition at_least(SpikeCount c) { return SpikeCondition({}, {Progression{c, 1}}); }

  bool matches(SpikeCount count) const;

  const std::set<SpikeCount>& exact() const { return exact_; }
  const std::vector<Progression>& progressions() const { return progressions_; }

  bool operator==(const SpikeCondition&) const = default;

 private:
  std::set<SpikeCount> exact_;
  std::vector<Progression> progressions_;
};

/// E/a^consume -> a^emit
struct FiringRule {
  SpikeCondition condition;
  SpikeCount consume = 1;
  SpikeCount emit = 1;

  bool operator==(const FiringRule&) const = default;
};

/// a^threshold -> λ, applicable on exactly `threshold` spikes.
struct ForgettingRule {
  SpikeCount threshold = 1;

  bool operator==(const ForgettingRule&) const = default;
};

struct Neuron {
  std::string label;
  SpikeCount initial_spikes = 0;
  std::vector<FiringRule> firing;
  std::vector<ForgettingRule> forgetting;

  bool operator==(const Neuron&) const = default;
};

/// Directed edge between zero-based neuron indices.
struct Synapse {
  std::size_t from = 0;
  std::size_t to = 0;

  auto operator<=>(const Synapse&) const = default;
};

class SnpSystem {
 public:
  SnpSystem() = default;
  /// Synapses are kept sorted and deduplicated. Endpoints out of range are
  /// dropped from the successor lists and reported by validate().
  SnpSystem(std::vector<Neuron> neurons, std::vector<Synapse> synapses);

  std::size_t size() const { return neurons_.size(); }
  const Neuron& neuron(std::size_t i) const { return neurons_.at(i); }
  const std::vector<Neuron>& neurons() const { return neurons_; }
  const std::vector<Synapse>& synapses() const { return synapses_; }
  const std::vector<std::size_t>& successors(std::size_t i) const { return out_.at(i); }

  bool operator==(const SnpSystem& o) const { return neurons_ == o.neurons_ && synapses_ == o.synapses_; }

 private:
  std::vector<Neuron> neurons_;
  std::vector<Synapse> synapses_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Violations of the model's well-formedness constraints; empty iff valid.
std::vector<std::string> validate(const SnpSystem& sys);

struct Configuration {
  std::vector<SpikeCount> counts;

  SpikeCount total() const;
  auto operator<=>(const Configuration&) const = default;
};

Configuration initial_configuration(const SnpSystem& sys);

/// First n components of a configuration.
std::vector<SpikeCount> projection(const Configuration& c, std::size_t n);

struct RuleRef {
  enum class Kind { firing, forgetting };
  Kind kind = Kind::firing;
  std::size_t index = 0;

  auto operator<=>(const RuleRef&) const = default;
};

std::string to_string(const Neuron& n, RuleRef r);

/// Per neuron: the rule applied in a step, or nullopt when the neuron idled.
using Choices = std::vector<std::optional<RuleRef>>;

/// Firing rules (in declaration order) then forgetting rules applicable to a
/// neuron holding `count` spikes.
std::vector<RuleRef> applicable_rules(const Neuron& neuron, SpikeCount count);

/// Applies one synchronous step with the given per-neuron choices. Throws
/// std::invalid_argument if a choice is not applicable, or a neuron with an
/// applicable rule idles.
Configuration apply(const SnpSystem& sys, const Configuration& c, const Choices& choices);

struct Transition {
  Configuration next;
  Choices choices;
};

struct Strict {};
struct SeededRandom {
  std::uint64_t seed = 0;
};
struct Exhaustive {
  std::size_t state_cap = 0;
};
using ChoicePolicy = std::variant<Strict, SeededRandom, Exhaustive>;

class NondeterminismError : public std::runtime_error {
 public:
  NondeterminismError(std::size_t neuron, const std::string& message);
  std::size_t neuron() const { return neuron_; }

 private:
  std::size_t neuron_;
};

class StateCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every successor of `c` over the product of per-neuron choices,
/// deduplicated by configuration and sorted by configuration.
std::vector<Transition> successors(const SnpSystem& sys, const Configuration& c);

struct Trace {
  std::vector<Configuration> configurations;
  std::vector<Choices> choices;  // choices[t] leads from configurations[t] to [t + 1]

  std::size_t steps() const { return choices.size(); }
  bool operator==(const Trace&) const = default;
};

/// Runs a system from its initial configuration. A simulator owns its random
/// generator state; it is never shared between runs.
class Simulator {
 public:
  explicit Simulator(const SnpSystem& sys, ChoicePolicy policy = Strict{});

  /// Strict and SeededRandom yield exactly one transition; Exhaustive yields
  /// the full successor set.
  std::vector<Transition> step(const Configuration& c);

  Trace run(std::size_t steps);
  /// Stops as soon as `stop` holds for the trace so far, or after
  /// `max_steps` transitions.
  Trace run_until(const std::function<bool(const Trace&)>& stop, std::size_t max_steps);

  /// Exhaustive exploration: the set of configurations reachable in exactly t
  /// steps, for t = 0..steps. Throws StateCapExceeded.
  std::vector<std::vector<Configuration>> explore(std::size_t steps);

 private:
  const SnpSystem& sys_;
  ChoicePolicy policy_;
  std::mt19937_64 rng_;
  std::size_t seen_states_ = 0;
};

/// Re-applies recorded choices from the first configuration; true iff every
/// configuration is reproduced exactly.
bool replay_matches(const SnpSystem& sys, const Trace& trace);

}  // namespace snpneg::snp
