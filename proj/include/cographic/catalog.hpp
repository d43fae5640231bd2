#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cographic/graph.hpp"

namespace cographic {

struct CatalogEntry {
    std::string name;
    std::string description;
    std::string text;  ///< graph file contents
};

/// Bundled example graphs: TREE3, LOOP1, B2, B3, C3..C7, THETA2, FIG-NG, FIG-NH.
const std::vector<CatalogEntry>& catalog();

/// Throws std::invalid_argument for an unknown name.
Graph catalog_graph(std::string_view name);

/// Cycle C_n on vertices 1..n with edges e1..en, e_i : i → i+1 (mod n).
Graph cycle_graph(std::size_t n);

}  // namespace cographic
