#pragma once

#include <optional>
#include <vector>

#include "cographic/chain.hpp"
#include "cographic/circuits.hpp"
#include "cographic/cycle_space.hpp"
#include "cographic/graph.hpp"
#include "cographic/lattice.hpp"
#include "cographic/orientations.hpp"

namespace cographic {

/// The semigroup C(σ) = σ(T, φ) ∩ H1(Γ, ℤ) with its Hilbert basis.
struct AffineSemigroup {
    TotCycPair label;
    CircuitSet circuits;                ///< Cir_φ(Γ∖T); one per Hilbert basis element
    std::vector<Chain1> hilbert_basis;  ///< [γ] for γ in `circuits`
    CycleBasis lattice_basis;           ///< ℤ-basis of H1(Γ∖T, ℤ)
    lattice::IntMatrix coordinates;     ///< row i: hilbert_basis[i] in lattice_basis
    std::vector<lattice::IntVector> facet_normals;  ///< primitive, in lattice_basis coordinates

    std::size_t lattice_rank() const { return lattice_basis.rank(); }
};

/// Hilbert basis of C(σ(T, φ)): the classes of the compatible circuits.
AffineSemigroup hilbert_basis(const Graph& g, const TotCycPair& p);
/// Same, reusing an enumerated Cyc(Γ).
AffineSemigroup hilbert_basis(const Graph& g, const CircuitSet& all_circuits, const TotCycPair& p);

/// ℤ-span of the Hilbert basis equals H1(Γ∖T, ℤ) (Smith normal form check).
bool spans_lattice(const AffineSemigroup& s);

struct MinorWitness {
    std::vector<std::size_t> columns_a;
    long long minor_a;
    std::vector<std::size_t> columns_b;
    long long minor_b;
};

struct UnimodularityResult {
    bool unimodular;
    std::optional<MinorWitness> witness;  ///< two nonzero maximal minors with different |value|
};

/// All nonzero d×d minors of the Hilbert basis matrix share one absolute value.
/// Column subsets are scanned in lexicographic order.
UnimodularityResult is_unimodular(const AffineSemigroup& s);

/// V^u − V^v; indices refer to `AffineSemigroup::circuits`.
struct Binomial {
    std::vector<unsigned> u;
    std::vector<unsigned> v;

    unsigned degree_u() const;
    unsigned degree_v() const;
    friend bool operator==(const Binomial&, const Binomial&) = default;
};

struct BinomialIdeal {
    std::vector<Binomial> generators;
    unsigned degree_bound = 0;
};

/// All primitive binomials V^u − V^v of the toric ideal with disjoint
/// supports and max(|u|, |v|) ≤ D, one per unordered pair (u is the
/// lexicographically larger side). Not a minimal generating set.
BinomialIdeal toric_ideal_up_to_degree(const AffineSemigroup& s, unsigned max_degree);

bool is_homogeneous(const BinomialIdeal& ideal);

struct GorensteinResult {
    bool q_gorenstein;
    bool gorenstein_integral;
    /// m with ℓ(m) = 1 for every primitive facet normal ℓ, in lattice_basis coordinates.
    std::optional<std::vector<lattice::Rational>> m;
};

GorensteinResult q_gorenstein(const AffineSemigroup& s);

/// Normalized lattice volume of the region between the origin and the
/// bounded facets of conv(C(σ) ∖ 0). Unimodular simplex = 1; rank 0 gives 1.
long long subdiagram_volume(const AffineSemigroup& s);

struct HilbertSamuelResult {
    long long multiplicity;
    std::vector<long long> values;  ///< dim R/m^n for n = 1..N
};

/// Multiplicity read off the d-th finite difference of n ↦ dim R(σ)/m^n,
/// counting lattice points whose longest Hilbert basis factorization has at
/// most n − 1 factors. Throws CapacityError when the differences have not
/// stabilized by n = N.
HilbertSamuelResult multiplicity_hs_oracle(const AffineSemigroup& s, unsigned horizon);

/// The default horizon dim + 6.
unsigned default_hs_horizon(const AffineSemigroup& s);

}  // namespace cographic
