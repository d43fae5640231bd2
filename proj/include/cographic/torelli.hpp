#pragma once

#include <utility>
#include <vector>

#include "cographic/errors.hpp"
#include "cographic/graph.hpp"

namespace cographic {

/// Unordered edge pairs {e, f}, e < f, neither a bridge nor a loop, whose
/// joint removal disconnects. Canonical (lexicographic) order.
std::vector<std::pair<EdgeIndex, EdgeIndex>> two_edge_cuts(const Graph& g);

/// Which member of a separating pair gets contracted.
enum class PairPolicy { lower_edge, higher_edge };

/// Contract every bridge, then repeatedly contract one member of the first
/// separating pair until none remain. b1 is unchanged.
Graph three_edge_connectivization(const Graph& g, PairPolicy policy = PairPolicy::lower_edge,
                                  const Limits& limits = {});

/// Unoriented circuit supports.
std::vector<EdgeSet> circuit_supports(const Graph& g, const Limits& limits = {});

/// An edge bijection g → h carrying circuit supports onto circuit supports
/// (`map[e]` is the image of edge e of g), or nullopt.
std::optional<std::vector<EdgeIndex>> find_cyclic_equivalence(const Graph& g, const Graph& h,
                                                              const Limits& limits = {});

bool cyclically_equivalent(const Graph& g, const Graph& h, const Limits& limits = {});

/// R(Γ) ≅ R(Γ′) ⇔ the 3-edge connectivizations are cyclically equivalent.
bool same_cographic_ring(const Graph& g, const Graph& h, const Limits& limits = {});

}  // namespace cographic
