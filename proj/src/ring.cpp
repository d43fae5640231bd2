#include "cographic/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace cographic {

namespace {

std::vector<TotCycPair> chamber_labels(const Graph& g, const Limits& limits) {
    const EdgeMask keep = [&] {
        EdgeMask m = g.all_edges();
        for (EdgeIndex e : separating_edges(g)) m[e] = false;
        return m;
    }();
    if (detail::mask_size(keep) > limits.orientation_edges)
        throw CapacityError("orientation_edges", limits.orientation_edges, detail::mask_size(keep));
    std::vector<TotCycPair> out;
    for (auto& phi : detail::enumerate_tco(g, keep)) out.emplace_back(g, std::move(phi));
    return out;
}

}  // namespace

RingPresentation present_ring(const Graph& g, unsigned max_degree, const Limits& limits) {
    RingPresentation r;
    r.generators = enumerate_oriented_circuits(g, limits);
    const auto& gens = r.generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!concordant(gens[i], gens[j])) r.discordance_quadrics.push_back({i, j});
    for (auto& chamber : chamber_labels(g, limits)) {
        AffineSemigroup s = hilbert_basis(g, gens, chamber);
        ChamberIdeal ci{std::move(chamber), {}, toric_ideal_up_to_degree(s, max_degree)};
        for (const auto& gamma : s.circuits)
            ci.variables.push_back(static_cast<std::size_t>(
                std::lower_bound(gens.begin(), gens.end(), gamma) - gens.begin()));
        r.chamber_binomials.push_back(std::move(ci));
    }
    return r;
}

std::optional<Chain1> multiply_monomials(const Graph& g, const Chain1& c, const Chain1& d) {
    if (!common_cone(g, c, d)) return std::nullopt;
    return c + d;
}

bool GradedPrime::contains(const Graph& g, const Chain1& c) const { return !cone_contains(g, label, c); }

GradedPrime graded_prime_of(const Graph& g, const TotCycPair& p) {
    return {p, p == TotCycPair::minimum(g)};
}

RingReport ring_report(const Graph& g, const RingOptions& options) {
    RingReport report;
    report.dimension = betti1(g);
    const CircuitSet circuits = enumerate_oriented_circuits(g, options.limits);
    report.embedded_dimension = circuits.size();
    report.minimal_prime_labels = chamber_labels(g, options.limits);
    report.normalization_components = report.minimal_prime_labels;
    report.multiplicity = 0;
    for (const auto& chamber : report.minimal_prime_labels) {
        const AffineSemigroup s = hilbert_basis(g, circuits, chamber);
        const unsigned horizon = options.hs_horizon ? options.hs_horizon : default_hs_horizon(s);
        auto hs = multiplicity_hs_oracle(s, horizon);
        ChamberMultiplicity cm{chamber, subdiagram_volume(s), hs.multiplicity, std::move(hs.values)};
        report.multiplicity += cm.subdiagram_volume;
        report.chambers.push_back(std::move(cm));
    }
    return report;
}

std::size_t StrataPoset::sum_of_minimal_primes(const std::vector<std::size_t>& chamber_indices) const {
    std::size_t best = size();
    for (std::size_t i = 0; i < size(); ++i) {
        const auto& over = above_[i];
        const bool covers = std::all_of(chamber_indices.begin(), chamber_indices.end(), [&](std::size_t c) {
            return std::binary_search(over.begin(), over.end(), c);
        });
        if (covers && (best == size() || order_.leq[best][i])) best = i;
    }
    return best;
}

StrataPoset strata_poset(const Graph& g, const Limits& limits) {
    StrataPoset s;
    const OrientationPoset poset = build_orientation_poset(g, limits);
    const CircuitSet circuits = enumerate_oriented_circuits(g, limits);
    s.labels_ = poset.elements();
    s.chambers_ = maximal_elements(poset);
    for (const auto& label : s.labels_) {
        // An interior point of σ(T, φ): the sum of its ray generators.
        Chain1 interior(g.num_edges());
        for (const auto& gamma : compatible_circuits(circuits, label)) interior += circuit_class(gamma);
        std::vector<std::size_t> over;
        for (std::size_t k = 0; k < s.chambers_.size(); ++k)
            if (cone_contains(g, s.chambers_[k], interior)) over.push_back(k);
        s.above_.push_back(std::move(over));
    }
    const std::size_t n = s.labels_.size();
    s.order_.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.order_.leq[i][j] = std::includes(s.above_[i].begin(), s.above_[i].end(), s.above_[j].begin(),
                                               s.above_[j].end());
    return s;
}

}  // namespace cographic
