#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "netcomp/dynamics.hpp"
#include "netcomp/graph.hpp"

namespace netcomp {

/// GraphML with an optional per-node `group` attribute in {A, B, U}.
void write_graphml(std::ostream& out, const Graph& g, const AgentStateVector* states = nullptr);

/// DOT (same `group` attribute when states are given).
void write_dot(std::ostream& out, const Graph& g, const AgentStateVector* states = nullptr);

/// Reads the GraphML subset this project writes. Returns the graph and, when
/// present, the node group labels. Throws std::invalid_argument on malformed
/// input (bad ids, duplicate edges, self-loops).
std::pair<Graph, std::optional<AgentStateVector>> read_graphml(std::istream& in);
std::pair<Graph, std::optional<AgentStateVector>> read_graphml_file(const std::string& path);

} // namespace netcomp
