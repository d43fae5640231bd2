#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cographic/chain.hpp"
#include "cographic/circuits.hpp"
#include "cographic/errors.hpp"
#include "cographic/fan.hpp"
#include "cographic/graph.hpp"
#include "cographic/orientations.hpp"
#include "cographic/poset.hpp"
#include "cographic/semigroup.hpp"

namespace cographic {

/// Toric ideal of one maximal cone, with variables mapped to global generators.
struct ChamberIdeal {
    TotCycPair chamber;
    std::vector<std::size_t> variables;  ///< local variable i is generator variables[i]
    BinomialIdeal ideal;
};

/// R(Γ) = k[V_γ : γ ∈ Cyc(Γ)] / I_Γ, with I_Γ generated by the quadrics
/// V_γ V_γ′ of discordant pairs plus the toric ideals of the maximal cones
/// (degree-bounded).
struct RingPresentation {
    CircuitSet generators;
    std::vector<std::pair<std::size_t, std::size_t>> discordance_quadrics;
    std::vector<ChamberIdeal> chamber_binomials;
};

RingPresentation present_ring(const Graph& g, unsigned max_degree = 3, const Limits& limits = {});

/// X^c · X^d: X^{c+d} when c, d share a cone, otherwise zero (nullopt).
std::optional<Chain1> multiply_monomials(const Graph& g, const Chain1& c, const Chain1& d);

/// The graded prime 𝔭_(T,φ) = (X^c : c ∉ σ(T, φ)).
struct GradedPrime {
    TotCycPair label;
    bool is_maximal_ideal;  ///< label is the minimum, so the prime is 𝔪

    /// X^c ∈ 𝔭 for a cycle c.
    bool contains(const Graph& g, const Chain1& c) const;
};

GradedPrime graded_prime_of(const Graph& g, const TotCycPair& p);

struct ChamberMultiplicity {
    TotCycPair chamber;
    long long subdiagram_volume;
    long long hilbert_samuel;
    std::vector<long long> hilbert_samuel_values;
};

struct RingReport {
    std::size_t dimension;
    std::size_t embedded_dimension;
    std::vector<TotCycPair> minimal_prime_labels;
    long long multiplicity;
    std::vector<TotCycPair> normalization_components;
    std::vector<ChamberMultiplicity> chambers;
};

struct RingOptions {
    /// 0 selects dim + 6 per chamber.
    unsigned hs_horizon = 0;
    Limits limits;
};

RingReport ring_report(const Graph& g, const RingOptions& options = {});

/// Strata of Spec R(Γ): one per graded prime, ordered by reverse inclusion.
/// The order is computed from the sets of minimal primes summing to each prime.
class StrataPoset {
public:
    const std::vector<TotCycPair>& labels() const { return labels_; }
    const FinitePoset& order() const { return order_; }
    std::size_t size() const { return labels_.size(); }
    /// Minimal primes (chamber indices into `chambers()`) whose sum is stratum i.
    const std::vector<std::size_t>& minimal_primes_of(std::size_t i) const { return above_[i]; }
    const std::vector<TotCycPair>& chambers() const { return chambers_; }

    /// Σ 𝔭_(chamber) over the given chambers, as the stratum of the intersection cone.
    std::size_t sum_of_minimal_primes(const std::vector<std::size_t>& chamber_indices) const;

private:
    std::vector<TotCycPair> labels_;
    std::vector<TotCycPair> chambers_;
    std::vector<std::vector<std::size_t>> above_;
    FinitePoset order_;

    friend StrataPoset strata_poset(const Graph&, const Limits&);
};

StrataPoset strata_poset(const Graph& g, const Limits& limits = {});

}  // namespace cographic
