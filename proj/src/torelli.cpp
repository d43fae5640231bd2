#include "cographic/torelli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "cographic/circuits.hpp"

namespace cographic {

std::vector<std::pair<EdgeIndex, EdgeIndex>> two_edge_cuts(const Graph& g) {
    const EdgeMask all = g.all_edges();
    const EdgeMask br = detail::bridges(g, all);
    const std::size_t base = detail::component_count(g, all);
    std::vector<std::pair<EdgeIndex, EdgeIndex>> cuts;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (br[e] || g.is_loop(e)) continue;
        for (EdgeIndex f = e + 1; f < g.num_edges(); ++f) {
            if (br[f] || g.is_loop(f)) continue;
            EdgeMask rest = all;
            rest[e] = rest[f] = false;
            if (detail::component_count(g, rest) > base) cuts.push_back({e, f});
        }
    }
    return cuts;
}

Graph three_edge_connectivization(const Graph& g, PairPolicy policy, const Limits& limits) {
    if (g.num_edges() > limits.circuit_edges) throw CapacityError("circuit_edges", limits.circuit_edges, g.num_edges());
    Graph h = g;
    for (;;) {
        const EdgeSet br = separating_edges(h);
        if (!br.empty()) {
            h = contract_edge(h, *br.begin());
            continue;
        }
        const auto cuts = two_edge_cuts(h);
        if (cuts.empty()) return h;
        const auto [e, f] = cuts.front();
        h = contract_edge(h, policy == PairPolicy::lower_edge ? e : f);
    }
}

std::vector<EdgeSet> circuit_supports(const Graph& g, const Limits& limits) {
    std::vector<EdgeSet> out;
    for (const auto& c : enumerate_oriented_circuits(g, limits))
        if (out.empty() || out.back() != c.support) out.push_back(c.support);
    return out;
}

std::optional<std::vector<EdgeIndex>> find_cyclic_equivalence(const Graph& g, const Graph& h,
                                                              const Limits& limits) {
    const std::size_t m = g.num_edges();
    if (h.num_edges() != m) return std::nullopt;
    if (m > 64) throw CapacityError("cyclic_equivalence_edges", 64, m);
    const auto cg = circuit_supports(g, limits);
    const auto ch = circuit_supports(h, limits);
    if (cg.size() != ch.size()) return std::nullopt;

    // Per-edge profile: sorted sizes of the circuits through the edge.
    auto profiles = [m](const std::vector<EdgeSet>& circuits) {
        std::vector<std::vector<std::size_t>> p(m);
        for (const auto& c : circuits)
            for (EdgeIndex e : c) p[e].push_back(c.size());
        for (auto& v : p) std::sort(v.begin(), v.end());
        return p;
    };
    const auto pg = profiles(cg), ph = profiles(ch);
    {
        auto a = pg, b = ph;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    auto bits = [](const EdgeSet& s) {
        std::uint64_t x = 0;
        for (EdgeIndex e : s) x |= std::uint64_t{1} << e;
        return x;
    };
    std::set<std::uint64_t> target;
    for (const auto& c : ch) target.insert(bits(c));
    // Circuits of g that become fully mapped once edge e is assigned (in order 0..m-1).
    std::vector<std::vector<const EdgeSet*>> closes_at(m);
    for (const auto& c : cg) closes_at[*std::prev(c.end())].push_back(&c);

    std::vector<EdgeIndex> image(m, m);
    std::vector<bool> used(m, false);
    std::function<bool(EdgeIndex)> assign = [&](EdgeIndex e) {
        if (e == m) return true;
        for (EdgeIndex f = 0; f < m; ++f) {
            if (used[f] || pg[e] != ph[f]) continue;
            image[e] = f;
            bool ok = true;
            for (const EdgeSet* c : closes_at[e]) {
                std::uint64_t x = 0;
                for (EdgeIndex k : *c) x |= std::uint64_t{1} << image[k];
                if (!target.count(x)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[f] = true;
            if (assign(e + 1)) return true;
            used[f] = false;
        }
        image[e] = m;
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return image;
}

bool cyclically_equivalent(const Graph& g, const Graph& h, const Limits& limits) {
    return find_cyclic_equivalence(g, h, limits).has_value();
}

bool same_cographic_ring(const Graph& g, const Graph& h, const Limits& limits) {
    return cyclically_equivalent(three_edge_connectivization(g, PairPolicy::lower_edge, limits),
                                 three_edge_connectivization(h, PairPolicy::lower_edge, limits), limits);
}

}  // namespace cographic
