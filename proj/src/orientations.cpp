#include "cographic/orientations.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cographic {

namespace detail {

std::vector<std::size_t> strong_components(const Graph& g, const Orientation& phi) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<VertexIndex>> out(n);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (auto d = phi.at(e)) out[g.source({e, *d})].push_back(g.target({e, *d}));
    }
    // Tarjan
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexIndex> stack;
    std::size_t counter = 0, components = 0;
    std::function<void(VertexIndex)> visit = [&](VertexIndex v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (VertexIndex w : out[v]) {
            if (index[w] == unvisited) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            VertexIndex w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = components;
            } while (w != v);
            ++components;
        }
    };
    for (VertexIndex v = 0; v < n; ++v)
        if (index[v] == unvisited) visit(v);
    return comp;
}

bool is_totally_cyclic_on_domain(const Graph& g, const Orientation& phi) {
    if (phi.size() != g.num_edges()) throw std::invalid_argument("orientation size mismatch");
    const auto comp = strong_components(g, phi);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        if (phi.defined(e) && comp[g.source(e)] != comp[g.target(e)]) return false;
    return true;
}

std::vector<Orientation> enumerate_tco(const Graph& g, const EdgeMask& mask) {
    std::vector<EdgeIndex> edges;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        if (mask[e]) edges.push_back(e);
    std::vector<Orientation> result;
    if (edges.empty()) {
        result.emplace_back(g.num_edges());
        return result;
    }
    const auto br = bridges(g, mask);
    if (std::find(br.begin(), br.end(), true) != br.end()) return result;

    const std::size_t k = edges.size();
    Orientation phi(g.num_edges());
    // Bit (k-1-i) set means edges[i] backward, so counting up is lexicographic.
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
        for (std::size_t i = 0; i < k; ++i)
            phi.set(edges[i], (code >> (k - 1 - i)) & 1 ? Dir::backward : Dir::forward);
        if (is_totally_cyclic_on_domain(g, phi)) result.push_back(phi);
    }
    return result;
}

}  // namespace detail

bool is_totally_cyclic(const Graph& g, const Orientation& phi) {
    if (phi.size() != g.num_edges() || !phi.is_total())
        throw std::invalid_argument("is_totally_cyclic needs an orientation of every edge");
    return detail::is_totally_cyclic_on_domain(g, phi);
}

std::vector<Orientation> enumerate_tco(const Graph& g, const Limits& limits) {
    if (g.num_edges() > limits.orientation_edges)
        throw CapacityError("orientation_edges", limits.orientation_edges, g.num_edges());
    return detail::enumerate_tco(g, g.all_edges());
}

TotCycPair::TotCycPair(const Graph& g, Orientation phi) : phi_(std::move(phi)) {
    if (!detail::is_totally_cyclic_on_domain(g, phi_))
        throw std::invalid_argument("orientation is not totally cyclic on its domain");
    for (EdgeIndex e = 0; e < phi_.size(); ++e)
        if (!phi_.defined(e)) removed_.insert(e);
}

TotCycPair TotCycPair::minimum(const Graph& g) {
    return TotCycPair(EdgeSet::from_mask(g.all_edges()), Orientation(g.num_edges()));
}

TotCycPair restrict_to_totally_cyclic(const Graph& g, const Orientation& phi) {
    if (phi.size() != g.num_edges()) throw std::invalid_argument("orientation size mismatch");
    const auto comp = detail::strong_components(g, phi);
    Orientation kept = phi;
    EdgeSet removed;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (phi.defined(e) && comp[g.source(e)] == comp[g.target(e)]) continue;
        kept.unset(e);
        removed.insert(e);
    }
    return TotCycPair(std::move(removed), std::move(kept));
}

bool OrientationPoset::leq(std::size_t i, std::size_t j) const {
    const auto di = domain_bits_[i], dj = domain_bits_[j];
    return (di & ~dj) == 0 && ((forward_bits_[i] ^ forward_bits_[j]) & di) == 0;
}

std::size_t OrientationPoset::index_of(const TotCycPair& p) const {
    auto it = index_.find(p.orientation());
    return it == index_.end() ? size() : it->second;
}

std::vector<std::vector<bool>> OrientationPoset::relation() const {
    std::vector<std::vector<bool>> m(size(), std::vector<bool>(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) m[i][j] = leq(i, j);
    return m;
}

OrientationPoset build_orientation_poset(const Graph& g, const Limits& limits) {
    const std::size_t m = g.num_edges();
    if (m > limits.poset_edges || m > 63) throw CapacityError("poset_edges", limits.poset_edges, m);

    OrientationPoset poset;
    auto add = [&](Orientation phi) {
        if (poset.elements_.size() >= limits.poset_elements)
            throw CapacityError("poset_elements", limits.poset_elements, poset.elements_.size() + 1);
        std::uint64_t dom = 0, fwd = 0;
        EdgeSet removed;
        for (EdgeIndex e = 0; e < m; ++e) {
            if (!phi.defined(e)) {
                removed.insert(e);
                continue;
            }
            dom |= std::uint64_t{1} << e;
            if (phi.sign(e) > 0) fwd |= std::uint64_t{1} << e;
        }
        poset.index_.emplace(phi, poset.elements_.size());
        poset.domain_bits_.push_back(dom);
        poset.forward_bits_.push_back(fwd);
        poset.elements_.push_back(TotCycPair(std::move(removed), std::move(phi)));
    };

    for (std::size_t k = 0; k <= m; ++k) {
        // T runs over k-subsets in lexicographic order.
        std::vector<bool> pick(m, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            EdgeMask rest(m);
            for (EdgeIndex e = 0; e < m; ++e) rest[e] = !pick[e];
            if (k < m) {
                auto br = detail::bridges(g, rest);
                if (std::find(br.begin(), br.end(), true) != br.end()) continue;
            }
            for (auto& phi : detail::enumerate_tco(g, rest)) add(std::move(phi));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    poset.minimum_ = poset.size() - 1;
    return poset;
}

std::vector<TotCycPair> maximal_elements(const OrientationPoset& p) {
    std::vector<TotCycPair> result;
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < p.size() && maximal; ++j)
            if (j != i && p.leq(i, j)) maximal = false;
        if (maximal) result.push_back(p[i]);
    }
    return result;
}

}  // namespace cographic
