#pragma once

#include <vector>

#include "cographic/chain.hpp"
#include "cographic/circuits.hpp"
#include "cographic/cycle_space.hpp"
#include "cographic/errors.hpp"
#include "cographic/graph.hpp"
#include "cographic/lattice.hpp"
#include "cographic/orientations.hpp"
#include "cographic/poset.hpp"

namespace cographic {

// Cones of the cographic fan are represented by their labels (T, φ):
//   σ(T, φ) = {c ∈ H1 : c(e) = 0 for e ∈ T, sign c(e) ∈ {0, φ(e)} otherwise}.

/// c ∈ σ(T, φ). Throws std::invalid_argument when c is not a cycle.
bool cone_contains(const Graph& g, const TotCycPair& cone, const Chain1& c);

/// Some cone holds both c and d, i.e. c(e)·d(e) ≥ 0 on every edge.
bool common_cone(const Graph& g, const Chain1& c, const Chain1& d);

/// The minimal cone containing the cycle c: (E ∖ supp c, φ_c).
TotCycPair cone_of(const Graph& g, const Chain1& c);

struct ConeDimension {
    std::size_t dimension;         ///< b1(Γ∖T)
    std::size_t voronoi_face_dim;  ///< b1(Γ) − b1(Γ∖T)
};

ConeDimension cone_dimension(const Graph& g, const TotCycPair& cone);

/// Generators [γ] of the extremal rays, γ ∈ Cir_φ(Γ∖T).
std::vector<Chain1> extremal_rays(const Graph& g, const TotCycPair& cone);

/// A facet of σ(T, φ) with its primitive inner normal ⟨·, φ(e)⟩, written in
/// the fundamental-cycle coordinates of H1(Γ∖T).
struct Facet {
    TotCycPair face;
    lattice::IntVector normal;
};

/// Facets found by intersecting with each hyperplane ⟨·, e⟩ = 0, e ∉ T,
/// and keeping the faces of codimension one. Normals are deduplicated.
std::vector<Facet> facets(const Graph& g, const TotCycPair& cone);

struct Cone {
    TotCycPair label;
    CircuitSet ray_circuits;
    std::size_t dimension;
    std::size_t voronoi_face_dim;
};

/// All cones of the cographic fan, labeled by O P_Γ, with the inclusion
/// order computed geometrically (ray generators tested for membership).
class Fan {
public:
    const Graph& graph() const { return graph_; }
    const OrientationPoset& labels() const { return poset_; }
    const CircuitSet& circuits() const { return circuits_; }
    const std::vector<Cone>& cones() const { return cones_; }
    const FinitePoset& inclusion() const { return inclusion_; }
    std::size_t size() const { return cones_.size(); }

    /// Indices of the full-dimensional cones.
    std::vector<std::size_t> chambers() const;
    /// Cones of dimension dim − 1 contained in cone i.
    std::vector<std::size_t> facets(std::size_t i) const;

private:
    Graph graph_;
    OrientationPoset poset_;
    CircuitSet circuits_;
    std::vector<Cone> cones_;
    FinitePoset inclusion_;

    friend Fan build_fan(const Graph&, const Limits&);
};

Fan build_fan(const Graph& g, const Limits& limits = {});

/// O P_Γ as a FinitePoset.
FinitePoset as_finite_poset(const OrientationPoset& p);

}  // namespace cographic
