#pragma once

#include "latmorse/poset.hpp"

#include <string>

namespace latmorse {

/// Hasse diagram as GraphViz DOT: covers only, drawn bottom-up.  Node IDs
/// are the poset labels, which are canonical set notation everywhere in
/// this project, so output is byte-stable.
std::string dot_hasse(const FinitePoset& p, const std::string& graph_name);

}  // namespace latmorse
