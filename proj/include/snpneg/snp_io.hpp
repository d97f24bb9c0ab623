#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "snpneg/snp.hpp"

namespace snpneg {

class Database;
class NeuronLayout;
struct FixpointChain;
struct TraceTable;

namespace snp {

/// Structured document: neurons (label, initial spikes, rules) and a 1-based
/// synapse list.
nlohmann::json to_json(const SnpSystem& sys);
/// Inverse of to_json; throws std::invalid_argument on malformed documents.
SnpSystem system_from_json(const nlohmann::json& doc);

/// Configurations plus the rule applied by each neuron at each step.
nlohmann::json to_json(const SnpSystem& sys, const Trace& trace);

/// Rows are neurons in index order, columns C_0..C_t.
std::string to_tsv(const SnpSystem& sys, const Trace& trace);

/// Synapse digraph. `fill` may supply a node fill color per neuron index.
std::string to_dot(const SnpSystem& sys, const std::function<std::string(std::size_t)>& fill = {});

}  // namespace snp

nlohmann::json to_json(const NeuronLayout& layout, const Database& db);
nlohmann::json to_json(const FixpointChain& chain);
nlohmann::json to_json(const TraceTable& table);

/// DOT of a compiled system with role-colored nodes.
std::string compiled_to_dot(const snp::SnpSystem& sys, const NeuronLayout& layout);

}  // namespace snpneg
