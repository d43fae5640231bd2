#include "cographic/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cographic {

EdgeSet::EdgeSet(std::initializer_list<EdgeIndex> edges) : EdgeSet(std::vector<EdgeIndex>(edges)) {}

EdgeSet::EdgeSet(std::vector<EdgeIndex> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet EdgeSet::from_mask(const EdgeMask& mask) {
    EdgeSet s;
    for (EdgeIndex e = 0; e < mask.size(); ++e)
        if (mask[e]) s.edges_.push_back(e);
    return s;
}

EdgeMask EdgeSet::to_mask(std::size_t num_edges) const {
    EdgeMask mask(num_edges, false);
    for (EdgeIndex e : edges_) mask.at(e) = true;
    return mask;
}

bool EdgeSet::contains(EdgeIndex e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void EdgeSet::insert(EdgeIndex e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

VertexIndex Graph::intern_vertex(const std::string& id) {
    auto [it, inserted] = vertex_lookup_.try_emplace(id, vertex_ids_.size());
    if (inserted) vertex_ids_.push_back(id);
    return it->second;
}

Graph Graph::from_edge_list(std::span<const EdgeSpec> edges, std::span<const std::string> vertices) {
    Graph g;
    for (const auto& v : vertices) g.intern_vertex(v);
    for (const auto& spec : edges) {
        if (spec.id.empty()) throw std::invalid_argument("empty edge id");
        if (g.edge_lookup_.count(spec.id))
            throw std::invalid_argument("duplicate edge id '" + spec.id + "'");
        VertexIndex s = g.intern_vertex(spec.source);
        VertexIndex t = g.intern_vertex(spec.target);
        g.edge_lookup_.emplace(spec.id, g.edge_ids_.size());
        g.edge_ids_.push_back(spec.id);
        g.edges_.push_back({s, t});
    }
    return g;
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view id) const {
    auto it = vertex_lookup_.find(std::string(id));
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

EdgeIndex Graph::edge_index(std::string_view id) const {
    auto e = find_edge(id);
    if (!e) throw std::invalid_argument("unknown edge id '" + std::string(id) + "'");
    return *e;
}

Graph delete_edges(const Graph& g, const EdgeSet& s) {
    for (EdgeIndex e : s)
        if (e >= g.num_edges()) throw std::invalid_argument("unknown edge index " + std::to_string(e));
    Graph h;
    h.vertex_ids_ = g.vertex_ids_;
    h.vertex_lookup_ = g.vertex_lookup_;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (s.contains(e)) continue;
        h.edge_lookup_.emplace(g.edge_ids_[e], h.edge_ids_.size());
        h.edge_ids_.push_back(g.edge_ids_[e]);
        h.edges_.push_back(g.edges_[e]);
    }
    return h;
}

Graph contract_edge(const Graph& g, EdgeIndex e) {
    if (e >= g.num_edges()) throw std::invalid_argument("unknown edge index " + std::to_string(e));
    if (g.is_loop(e)) throw std::invalid_argument("cannot contract loop '" + g.edge_id(e) + "'");
    const VertexIndex keep = std::min(g.source(e), g.target(e));
    const VertexIndex drop = std::max(g.source(e), g.target(e));
    auto remap = [&](VertexIndex v) {
        if (v == drop) v = keep;
        return v > drop ? v - 1 : v;
    };
    Graph h;
    for (VertexIndex v = 0; v < g.num_vertices(); ++v)
        if (v != drop) h.intern_vertex(g.vertex_ids_[v]);
    for (EdgeIndex f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        h.edge_lookup_.emplace(g.edge_ids_[f], h.edge_ids_.size());
        h.edge_ids_.push_back(g.edge_ids_[f]);
        h.edges_.push_back({remap(g.source(f)), remap(g.target(f))});
    }
    return h;
}

namespace detail {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
    std::vector<std::size_t> parent;
};

}  // namespace

std::size_t mask_size(const EdgeMask& mask) {
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

std::size_t component_count(const Graph& g, const EdgeMask& mask) {
    UnionFind uf(g.num_vertices());
    std::size_t components = g.num_vertices();
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        if (mask[e] && uf.unite(g.source(e), g.target(e))) --components;
    return components;
}

std::size_t betti1(const Graph& g, const EdgeMask& mask) {
    return mask_size(mask) + component_count(g, mask) - g.num_vertices();
}

EdgeMask bridges(const Graph& g, const EdgeMask& mask) {
    // Tarjan low-link; the tree edge is skipped by edge index so parallel edges count.
    std::vector<std::vector<std::pair<VertexIndex, EdgeIndex>>> adj(g.num_vertices());
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (!mask[e] || g.is_loop(e)) continue;
        adj[g.source(e)].push_back({g.target(e), e});
        adj[g.target(e)].push_back({g.source(e), e});
    }
    EdgeMask result(g.num_edges(), false);
    std::vector<std::size_t> disc(g.num_vertices(), 0), low(g.num_vertices(), 0);
    std::size_t timer = 0;
    std::function<void(VertexIndex, EdgeIndex)> dfs = [&](VertexIndex v, EdgeIndex via) {
        disc[v] = low[v] = ++timer;
        for (auto [w, e] : adj[v]) {
            if (e == via) continue;
            if (disc[w]) {
                low[v] = std::min(low[v], disc[w]);
            } else {
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) result[e] = true;
            }
        }
    };
    const EdgeIndex none = g.num_edges();
    for (VertexIndex v = 0; v < g.num_vertices(); ++v)
        if (!disc[v]) dfs(v, none);
    return result;
}

}  // namespace detail

EdgeSet separating_edges(const Graph& g) {
    return EdgeSet::from_mask(detail::bridges(g, g.all_edges()));
}

std::size_t component_count(const Graph& g) { return detail::component_count(g, g.all_edges()); }

std::size_t betti1(const Graph& g) { return detail::betti1(g, g.all_edges()); }

}  // namespace cographic
