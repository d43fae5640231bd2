#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cographic/chain.hpp"
#include "cographic/errors.hpp"
#include "cographic/graph.hpp"

namespace cographic {

/// True iff every connected component of the digraph (g, φ) is strongly
/// connected. φ must be total; a partial orientation throws std::invalid_argument.
bool is_totally_cyclic(const Graph& g, const Orientation& phi);

/// All totally cyclic orientations in lexicographic order over edges
/// (forward before backward). Throws CapacityError above `limits.orientation_edges`.
std::vector<Orientation> enumerate_tco(const Graph& g, const Limits& limits = {});

class OrientationPoset;
OrientationPoset build_orientation_poset(const Graph& g, const Limits& limits);

/// (T, φ): an edge set T and a totally cyclic orientation φ of Γ∖T.
/// φ is stored over the ambient edges and is undefined exactly on T.
class TotCycPair {
public:
    /// Validates total cyclicity of φ on Γ∖T; throws std::invalid_argument otherwise.
    TotCycPair(const Graph& g, Orientation phi);

    /// The minimum (E, ∅).
    static TotCycPair minimum(const Graph& g);

    const EdgeSet& removed() const { return removed_; }
    const Orientation& orientation() const { return phi_; }
    EdgeMask remaining_mask() const { return phi_.domain_mask(); }

    /// Order of the poset: Γ∖T ⊆ Γ∖T′ and φ = φ′ restricted.
    bool operator<=(const TotCycPair& other) const { return phi_.is_restriction_of(other.phi_); }

    friend bool operator==(const TotCycPair& a, const TotCycPair& b) { return a.phi_ == b.phi_; }
    friend auto operator<=>(const TotCycPair& a, const TotCycPair& b) { return a.phi_ <=> b.phi_; }

private:
    TotCycPair(EdgeSet removed, Orientation phi) : removed_(std::move(removed)), phi_(std::move(phi)) {}

    EdgeSet removed_;
    Orientation phi_;

    friend OrientationPoset build_orientation_poset(const Graph&, const Limits&);
    friend TotCycPair restrict_to_totally_cyclic(const Graph&, const Orientation&);
};

/// The largest (T, φ|) obtainable from a partial orientation: keeps the edges
/// that lie on a directed cycle of (domain, φ), i.e. inside a strongly
/// connected component.
TotCycPair restrict_to_totally_cyclic(const Graph& g, const Orientation& phi);

/// The poset O P_Γ of all pairs (T, φ).
class OrientationPoset {
public:
    const std::vector<TotCycPair>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const TotCycPair& operator[](std::size_t i) const { return elements_[i]; }

    bool leq(std::size_t i, std::size_t j) const;
    std::size_t minimum() const { return minimum_; }
    /// Index of a pair, or size() when absent.
    std::size_t index_of(const TotCycPair& p) const;

    /// The relation as a dense matrix, `m[i][j] == leq(i, j)`.
    std::vector<std::vector<bool>> relation() const;

private:
    std::vector<TotCycPair> elements_;
    std::vector<std::uint64_t> domain_bits_;
    std::vector<std::uint64_t> forward_bits_;
    std::map<Orientation, std::size_t> index_;
    std::size_t minimum_ = 0;

    friend OrientationPoset build_orientation_poset(const Graph&, const Limits&);
};

/// Enumerates T by increasing |T|, then T lexicographically, then φ in
/// canonical order. Throws CapacityError above `limits.poset_edges` edges or
/// `limits.poset_elements` elements.
OrientationPoset build_orientation_poset(const Graph& g, const Limits& limits = {});

/// Elements with no element strictly above them.
std::vector<TotCycPair> maximal_elements(const OrientationPoset& p);

namespace detail {

/// Totally cyclic test for a partial orientation on its own domain.
bool is_totally_cyclic_on_domain(const Graph& g, const Orientation& phi);

/// Strongly connected component id per vertex of the digraph (V, domain of φ).
std::vector<std::size_t> strong_components(const Graph& g, const Orientation& phi);

/// All totally cyclic orientations of (V, mask), canonical order.
std::vector<Orientation> enumerate_tco(const Graph& g, const EdgeMask& mask);

}  // namespace detail

}  // namespace cographic
