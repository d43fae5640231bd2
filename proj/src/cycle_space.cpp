#include "cographic/cycle_space.hpp"

#include <cstdlib>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace cographic {

namespace {

void check_size(const Graph& g, const Chain1& c) {
    if (c.size() != g.num_edges())
        throw std::invalid_argument("chain has " + std::to_string(c.size()) + " coefficients, graph has " +
                                    std::to_string(g.num_edges()) + " edges");
}

}  // namespace

Chain0 boundary(const Graph& g, const Chain1& c) {
    check_size(g, c);
    Chain0 b{std::vector<long long>(g.num_vertices(), 0)};
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        b.coefficients[g.target(e)] += c[e];
        b.coefficients[g.source(e)] -= c[e];
    }
    return b;
}

bool is_cycle(const Graph& g, const Chain1& c) { return boundary(g, c).is_zero(); }

long long inner_product(const Chain1& c, const Chain1& d) {
    if (c.size() != d.size()) throw std::invalid_argument("chain size mismatch");
    return std::inner_product(c.coefficients().begin(), c.coefficients().end(),
                              d.coefficients().begin(), 0LL);
}

std::vector<long long> CycleBasis::coordinates(const Chain1& cycle) const {
    std::vector<long long> x;
    x.reserve(coforest.size());
    for (EdgeIndex e : coforest) x.push_back(cycle[e]);
    return x;
}

Chain1 CycleBasis::from_coordinates(const std::vector<long long>& coords) const {
    if (coords.size() != basis.size()) throw std::invalid_argument("coordinate count mismatch");
    if (basis.empty()) throw std::invalid_argument("empty basis has no ambient size");
    Chain1 c(basis.front().size());
    for (std::size_t i = 0; i < coords.size(); ++i) c += coords[i] * basis[i];
    return c;
}

CycleBasis fundamental_cycle_basis(const Graph& g) { return fundamental_cycle_basis(g, g.all_edges()); }

CycleBasis fundamental_cycle_basis(const Graph& g, const EdgeMask& mask) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };

    CycleBasis cb;
    std::vector<std::vector<std::pair<VertexIndex, OrientedEdge>>> tree(n);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (!mask[e]) continue;
        auto a = find(g.source(e)), b = find(g.target(e));
        if (a == b) {
            cb.coforest.push_back(e);
            continue;
        }
        root[std::max(a, b)] = std::min(a, b);
        cb.spanning_forest.insert(e);
        tree[g.source(e)].push_back({g.target(e), {e, Dir::forward}});
        tree[g.target(e)].push_back({g.source(e), {e, Dir::backward}});
    }

    for (EdgeIndex f : cb.coforest) {
        Chain1 cycle = Chain1::unit(g.num_edges(), {f, Dir::forward});
        // Close f→ by the forest path from t(f) back to s(f).
        const VertexIndex from = g.target(f), to = g.source(f);
        std::vector<std::optional<std::pair<VertexIndex, OrientedEdge>>> via(n);
        std::vector<bool> seen(n, false);
        std::queue<VertexIndex> q;
        q.push(from);
        seen[from] = true;
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto [w, r] : tree[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                via[w] = {{v, r}};
                q.push(w);
            }
        }
        for (VertexIndex v = to; v != from;) {
            auto [prev, r] = *via[v];
            cycle[r.edge] += sign_of(r.dir);
            v = prev;
        }
        cb.basis.push_back(std::move(cycle));
    }
    return cb;
}

Chain1 CanonicalForm::reconstruct() const {
    Chain1 c(multiplicity.size());
    for (EdgeIndex e : support) c[e] = multiplicity[e] * orientation.sign(e);
    return c;
}

CanonicalForm canonical_form(const Graph& g, const Chain1& c) {
    check_size(g, c);
    CanonicalForm cf{c.support(), Orientation(c.size()), std::vector<long long>(c.size(), 0)};
    for (EdgeIndex e : cf.support) {
        cf.orientation.set(e, c[e] > 0 ? Dir::forward : Dir::backward);
        cf.multiplicity[e] = std::llabs(c[e]);
    }
    return cf;
}

}  // namespace cographic
