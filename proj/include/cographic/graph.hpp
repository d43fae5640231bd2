#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cographic {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Membership flags indexed by edge; `mask[e]` true means edge e is present.
using EdgeMask = std::vector<bool>;

/// Direction of an oriented edge relative to the reference orientation.
enum class Dir : std::int8_t { backward = -1, forward = 1 };

inline Dir reverse(Dir d) { return d == Dir::forward ? Dir::backward : Dir::forward; }
inline int sign_of(Dir d) { return static_cast<int>(d); }

/// One of the two half-edges e→ / e← of an edge.
struct OrientedEdge {
    EdgeIndex edge;
    Dir dir;

    OrientedEdge involution() const { return {edge, reverse(dir)}; }
    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

/// Canonically ordered, duplicate-free set of edge indices.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<EdgeIndex> edges);
    explicit EdgeSet(std::vector<EdgeIndex> edges);

    static EdgeSet from_mask(const EdgeMask& mask);
    EdgeMask to_mask(std::size_t num_edges) const;

    bool contains(EdgeIndex e) const;
    void insert(EdgeIndex e);
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const std::vector<EdgeIndex>& indices() const { return edges_; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<EdgeIndex> edges_;
};

/// Input record for `Graph::from_edge_list`: edge id, source vertex id, target vertex id.
struct EdgeSpec {
    std::string id;
    std::string source;
    std::string target;
};

/// Finite multigraph in half-edge form. Loops and parallel edges are allowed.
///
/// Each edge e carries the reference orientation e→ (source → target given at
/// construction); e← is its involution. Vertex and edge order is the order of
/// first declaration and is the canonical enumeration order everywhere.
class Graph {
public:
    Graph() = default;

    /// Vertices in `vertices` are declared first (in order); vertices first
    /// mentioned by an edge are appended as they appear.
    static Graph from_edge_list(std::span<const EdgeSpec> edges,
                                std::span<const std::string> vertices = {});
    static Graph from_edge_list(std::initializer_list<EdgeSpec> edges) {
        return from_edge_list(std::span<const EdgeSpec>(edges.begin(), edges.size()));
    }

    std::size_t num_vertices() const { return vertex_ids_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
    const std::string& edge_id(EdgeIndex e) const { return edge_ids_.at(e); }
    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    std::optional<EdgeIndex> find_edge(std::string_view id) const;
    /// Throws std::invalid_argument on an unknown id.
    EdgeIndex edge_index(std::string_view id) const;

    VertexIndex source(EdgeIndex e) const { return edges_.at(e).source; }
    VertexIndex target(EdgeIndex e) const { return edges_.at(e).target; }
    VertexIndex source(OrientedEdge r) const {
        return r.dir == Dir::forward ? source(r.edge) : target(r.edge);
    }
    VertexIndex target(OrientedEdge r) const { return source(r.involution()); }
    bool is_loop(EdgeIndex e) const { return source(e) == target(e); }

    EdgeMask all_edges() const { return EdgeMask(num_edges(), true); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_ids_ == b.vertex_ids_ && a.edge_ids_ == b.edge_ids_ &&
               a.edges_ == b.edges_;
    }

private:
    struct Ends {
        VertexIndex source;
        VertexIndex target;
        friend bool operator==(const Ends&, const Ends&) = default;
    };

    VertexIndex intern_vertex(const std::string& id);

    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::vector<Ends> edges_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;

    friend Graph delete_edges(const Graph&, const EdgeSet&);
    friend Graph contract_edge(const Graph&, EdgeIndex);
};

/// Spanning subgraph Γ∖S: same vertices, edges E∖S (edge ids kept, indices renumbered).
Graph delete_edges(const Graph& g, const EdgeSet& s);

/// Identify the endpoints of a non-loop edge and drop it. The merged vertex
/// keeps the id of the lower-ordered endpoint. Throws std::invalid_argument on a loop.
Graph contract_edge(const Graph& g, EdgeIndex e);

/// Bridges of the multigraph; parallel edges and loops are never bridges.
EdgeSet separating_edges(const Graph& g);

/// First Betti number |E| − |V| + #components.
std::size_t betti1(const Graph& g);

std::size_t component_count(const Graph& g);

namespace detail {

/// Number of connected components of (V, {e : mask[e]}).
std::size_t component_count(const Graph& g, const EdgeMask& mask);
std::size_t betti1(const Graph& g, const EdgeMask& mask);
/// Bridges of the subgraph (V, {e : mask[e]}).
EdgeMask bridges(const Graph& g, const EdgeMask& mask);
std::size_t mask_size(const EdgeMask& mask);

}  // namespace detail

}  // namespace cographic
