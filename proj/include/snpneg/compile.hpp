#pragma once

#include <string>
#include <vector>

#include "snpneg/interpretation.hpp"
#include "snpneg/kb.hpp"
#include "snpneg/semantics.hpp"
#include "snpneg/snp.hpp"

namespace snpneg {

enum class NeuronRole { output, variable, rule, clock_g, clock_t };

const char* to_string(NeuronRole role);

/// Neuron numbering of a compiled database with n variables and k rules
/// (zero-based indices; labels are 1-based):
///   output(p_j) = j, variable(p_j) = n + j, rule(r_j) = 2n + j,
///   G = 2n + k, T = 2n + k + 1.
class NeuronLayout {
 public:
  NeuronLayout() = default;
  NeuronLayout(std::size_t n, std::size_t k) : n_(n), k_(k) {}

  std::size_t var_count() const { return n_; }
  std::size_t rule_count() const { return k_; }
  std::size_t size() const { return 2 * n_ + k_ + 2; }

  std::size_t output(VarId v) const { return v.index; }
  std::size_t variable(VarId v) const { return n_ + v.index; }
  std::size_t rule(std::size_t id) const { return 2 * n_ + id; }
  std::size_t clock_g() const { return 2 * n_ + k_; }
  std::size_t clock_t() const { return 2 * n_ + k_ + 1; }

  NeuronRole role(std::size_t neuron) const;
  /// Variable index for output/variable neurons, rule id for rule neurons.
  std::size_t entity(std::size_t neuron) const;
  /// σ_1 .. σ_{2n+k}, σ_G, σ_T
  std::string label(std::size_t neuron) const;
  /// `output:p3`, `variable:p3`, `rule:R2`, `clock:G`, `clock:T`
  std::string describe(std::size_t neuron, const Database& db) const;

  bool operator==(const NeuronLayout&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
};

struct CompileOptions {
  /// Omit the sub-threshold forgetting rules a^l -> λ (1 <= l < h) from
  /// variable neurons with h >= 2, reproducing the construction verbatim.
  /// Such systems retain stray spikes and drift from the failure operator.
  bool strict_paper = false;
};

struct CompiledSystem {
  snp::SnpSystem system;
  NeuronLayout layout;
};

/// Builds the SN P system of degree 2n+k+2 whose configuration C_3 encodes
/// F(I) on the output neurons.
CompiledSystem compile(const Database& db, const Interpretation& i, CompileOptions options = {});

/// Initial spike vector of the compiled system for interpretation `i`:
/// variable(p_j) holds I(p_j)*h_j (or I(p_j) when h_j = 0), G holds one spike.
std::vector<snp::SpikeCount> encode_interpretation(const Database& db, const Interpretation& i);

/// Reads an interpretation off the output neurons of a configuration.
Interpretation read_outputs(const NeuronLayout& layout, const snp::Configuration& c);

/// F(I) computed as the output projection of C_3.
Interpretation failure_via_snp(const Database& db, const Interpretation& i, CompileOptions options = {});

struct SnpIteration {
  FixpointChain chain;
  snp::Trace trace;  // includes the cycle that confirmed the fixpoint
  CompiledSystem compiled;
  std::size_t simulator_steps = 0;
};

/// Iterates F on the compiled network: chain entry z is the output
/// projection of C_{2z+1}. Halts when two consecutive odd projections agree.
/// Throws snp::NondeterminismError if the compiled system is not
/// deterministic, std::logic_error if no fixpoint shows up within n+2 cycles.
SnpIteration iterate_via_snp(const Database& db, Direction direction, CompileOptions options = {});

std::vector<VarId> cwa_via_snp(const Database& db);
std::vector<VarId> naf_via_snp(const Database& db);

/// Neuron-by-step spike table over C_0 .. C_{2m+1}, m = productive
/// iterations. Cells on output rows at odd columns carry the semantic reading.
struct TraceTable {
  Direction direction = Direction::down;
  std::vector<std::string> labels;
  std::vector<std::string> roles;
  /// rows[neuron][column]
  std::vector<std::vector<snp::SpikeCount>> rows;
  std::size_t columns = 0;
  std::size_t output_rows = 0;

  bool is_reading(std::size_t row, std::size_t column) const { return row < output_rows && column % 2 == 1; }
};

TraceTable make_trace_table(const Database& db, const CompiledSystem& compiled, const snp::Trace& trace,
                            Direction direction, std::size_t columns);
TraceTable trace_table(const Database& db, Direction direction, CompileOptions options = {});

std::string render_tsv(const TraceTable& table);

/// Checks the structural invariants of compiled traces at every step: the
/// G/T clock alternates (G loaded on even steps), rule and output neurons are
/// empty on even steps, variable neurons are empty on odd steps, and rule
/// neurons of facts never fire. Returns one message per violation.
std::vector<std::string> check_structural_lemmas(const NeuronLayout& layout, const Database& db,
                                                 const snp::Trace& trace);

}  // namespace snpneg
