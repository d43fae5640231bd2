#pragma once

#include <vector>

#include "cographic/chain.hpp"
#include "cographic/graph.hpp"

namespace cographic {

/// ∂c = Σ c(e)·(t(e→) − s(e→)). Throws std::invalid_argument on a size mismatch.
Chain0 boundary(const Graph& g, const Chain1& c);

bool is_cycle(const Graph& g, const Chain1& c);

/// Edge inner product Σ c(e)·d(e).
long long inner_product(const Chain1& c, const Chain1& d);

/// Fundamental cycles of a spanning forest.
///
/// The forest is chosen greedily by lowest edge index, so the basis is
/// reproducible. `basis[i]` has coefficient +1 on `coforest[i]` and 0 on every
/// other co-forest edge; coordinates of a cycle are therefore its values on
/// the co-forest edges.
struct CycleBasis {
    EdgeSet spanning_forest;
    std::vector<EdgeIndex> coforest;
    std::vector<Chain1> basis;

    std::size_t rank() const { return basis.size(); }
    /// Coordinates of a cycle (of the subgraph the basis was built for).
    std::vector<long long> coordinates(const Chain1& cycle) const;
    Chain1 from_coordinates(const std::vector<long long>& coords) const;
};

CycleBasis fundamental_cycle_basis(const Graph& g);

/// Basis of H1 of the spanning subgraph (V, {e : mask[e]}), in ambient edge indexing.
CycleBasis fundamental_cycle_basis(const Graph& g, const EdgeMask& mask);

/// c = Σ m_c(e)·φ_c(e) with all m_c(e) > 0.
struct CanonicalForm {
    EdgeSet support;
    Orientation orientation;              ///< φ_c, defined exactly on the support
    std::vector<long long> multiplicity;  ///< m_c(e), 0 off the support

    Chain1 reconstruct() const;
};

CanonicalForm canonical_form(const Graph& g, const Chain1& c);

}  // namespace cographic
