#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cographic/graph.hpp"

namespace cographic {

/// Parse the line-oriented graph format:
///
///     # comment
///     vertex <id>
///     edge <id> <source> <target>
///
/// Vertex lines are optional. Throws ParseError carrying the offending line.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::filesystem::path& path);

/// Canonical text form; `parse_graph(to_text(g)) == g`.
std::string to_text(const Graph& g);

}  // namespace cographic
