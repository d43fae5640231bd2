#pragma once

#include <utility>
#include <vector>

#include "cographic/chain.hpp"
#include "cographic/errors.hpp"
#include "cographic/graph.hpp"
#include "cographic/orientations.hpp"

namespace cographic {

/// A cyclic subgraph (connected, bridgeless, b1 = 1) with one of its two
/// totally cyclic orientations.
struct OrientedCircuit {
    EdgeSet support;
    Orientation orientation;  ///< defined exactly on `support`

    OrientedCircuit reversed() const { return {support, orientation.reversed()}; }

    friend bool operator==(const OrientedCircuit&, const OrientedCircuit&) = default;
    /// Canonical order: support as sorted index list, then direction of the lowest edge.
    friend bool operator<(const OrientedCircuit& a, const OrientedCircuit& b);
};

using CircuitSet = std::vector<OrientedCircuit>;

/// Cyc(Γ) in canonical order. Throws CapacityError above `limits.circuit_edges`.
CircuitSet enumerate_oriented_circuits(const Graph& g, const Limits& limits = {});

/// [γ] = Σ φ(e) over the support.
Chain1 circuit_class(const OrientedCircuit& gamma);

/// Agreement on every shared edge.
bool concordant(const OrientedCircuit& gamma, const OrientedCircuit& delta);

/// Cir_φ(Γ∖T): circuits supported on E∖T whose orientation restricts φ.
CircuitSet compatible_circuits(const Graph& g, const TotCycPair& p);
/// Same, filtering an already enumerated Cyc(Γ).
CircuitSet compatible_circuits(const CircuitSet& all, const TotCycPair& p);

/// c = Σ n(γ)·[γ] with each γ concordant with the sign pattern of c.
/// Repeatedly peels off the directed cycle found by lowest-edge-index DFS.
/// Throws std::invalid_argument when c is not a cycle.
std::vector<std::pair<OrientedCircuit, long long>> decompose_cycle(const Graph& g, const Chain1& c);

/// (T_σ, φ_σ) of a pairwise concordant set of circuits. Throws
/// std::invalid_argument on a discordant pair.
TotCycPair support_orientation_of(const Graph& g, const CircuitSet& sigma);

}  // namespace cographic
