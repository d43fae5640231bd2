#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "cographic/lattice.hpp"

namespace oracle {

namespace {

bool reaches(const Graph& g, const std::vector<int>& signs, VertexIndex from, VertexIndex to) {
    std::vector<bool> seen(g.num_vertices(), false);
    std::queue<VertexIndex> q;
    q.push(from);
    seen[from] = true;
    while (!q.empty()) {
        const VertexIndex v = q.front();
        q.pop();
        if (v == to) return true;
        for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
            if (signs[e] == 0) continue;
            const VertexIndex tail = signs[e] > 0 ? g.source(e) : g.target(e);
            const VertexIndex head = signs[e] > 0 ? g.target(e) : g.source(e);
            if (tail == v && !seen[head]) {
                seen[head] = true;
                q.push(head);
            }
        }
    }
    return false;
}

bool in_cone_by_signs(const AffineSemigroup& s, const Chain1& c) {
    const auto& phi = s.label.orientation();
    for (EdgeIndex e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        if (!phi.defined(e)) return false;
        if ((c[e] > 0 ? 1 : -1) != phi.sign(e)) return false;
    }
    return true;
}

}  // namespace

bool every_edge_on_directed_cycle(const Graph& g, const std::vector<int>& signs) {
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (signs[e] == 0) continue;
        const VertexIndex tail = signs[e] > 0 ? g.source(e) : g.target(e);
        const VertexIndex head = signs[e] > 0 ? g.target(e) : g.source(e);
        if (!reaches(g, signs, head, tail)) return false;
    }
    return true;
}

std::size_t count_tco(const Graph& g, const EdgeMask& mask) {
    std::vector<EdgeIndex> dom;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        if (mask[e]) dom.push_back(e);
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dom.size()); ++bits) {
        std::vector<int> signs(g.num_edges(), 0);
        for (std::size_t i = 0; i < dom.size(); ++i) signs[dom[i]] = (bits >> i) & 1 ? -1 : 1;
        if (every_edge_on_directed_cycle(g, signs)) ++count;
    }
    return count;
}

std::size_t count_tco(const Graph& g) { return count_tco(g, g.all_edges()); }

std::size_t count_tot_cyc_pairs(const Graph& g) {
    const std::size_t m = g.num_edges();
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= 3;
    std::size_t count = 0;
    std::vector<int> signs(m);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t x = code;
        for (std::size_t e = 0; e < m; ++e, x /= 3) signs[e] = static_cast<int>(x % 3) - 1;
        if (every_edge_on_directed_cycle(g, signs)) ++count;
    }
    return count;
}

std::size_t count_circuit_supports(const Graph& g) {
    const std::size_t m = g.num_edges();
    std::size_t count = 0;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
        std::vector<int> degree(g.num_vertices(), 0);
        std::vector<std::size_t> comp(g.num_vertices());
        for (std::size_t v = 0; v < comp.size(); ++v) comp[v] = v;
        auto find = [&](std::size_t v) {
            while (comp[v] != v) v = comp[v];
            return v;
        };
        VertexIndex any = 0;
        for (EdgeIndex e = 0; e < m; ++e) {
            if (!((bits >> e) & 1)) continue;
            ++degree[g.source(e)];
            ++degree[g.target(e)];
            comp[find(g.source(e))] = find(g.target(e));
            any = g.source(e);
        }
        bool ok = true;
        for (VertexIndex v = 0; v < g.num_vertices() && ok; ++v)
            if (degree[v] != 0 && (degree[v] != 2 || find(v) != find(any))) ok = false;
        if (ok) ++count;
    }
    return count;
}

std::size_t betti1_by_rank(const Graph& g) {
    lattice::IntMatrix d(g.num_vertices(), lattice::IntVector(g.num_edges(), 0));
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        d[g.target(e)][e] += 1;
        d[g.source(e)][e] -= 1;
    }
    const std::size_t r = g.num_vertices() == 0 || g.num_edges() == 0 ? 0 : lattice::rank(d);
    return g.num_edges() - r;
}

bool in_integer_cone(const std::vector<Chain1>& rays, const Chain1& c) {
    std::map<Chain1, bool> memo;
    auto search = [&](auto&& self, const Chain1& x) -> bool {
        if (x.is_zero()) return true;
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        bool found = false;
        for (const auto& r : rays) {
            const Chain1 rest = x - r;
            if (rest.l1_norm() < x.l1_norm() && self(self, rest)) {
                found = true;
                break;
            }
        }
        memo.emplace(x, found);
        return found;
    };
    return search(search, c);
}

std::vector<Chain1> irreducibles_in_box(const AffineSemigroup& s, long long m) {
    const std::size_t d = s.lattice_rank();
    std::vector<Chain1> points;
    std::vector<long long> coords(d, -m);
    while (true) {
        const Chain1 c = s.lattice_basis.from_coordinates(coords);
        if (!c.is_zero() && in_cone_by_signs(s, c)) points.push_back(c);
        std::size_t i = 0;
        while (i < d && coords[i] == m) coords[i++] = -m;
        if (i == d) break;
        ++coords[i];
    }
    std::set<Chain1> cone(points.begin(), points.end());
    std::vector<Chain1> irreducible;
    for (const auto& p : points) {
        bool splits = false;
        for (const auto& q : points) {
            if (q == p) continue;
            const Chain1 rest = p - q;
            if (!rest.is_zero() && in_cone_by_signs(s, rest)) {
                splits = true;
                break;
            }
        }
        if (!splits) irreducible.push_back(p);
    }
    std::sort(irreducible.begin(), irreducible.end());
    return irreducible;
}

Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
    std::uniform_int_distribution<std::size_t> nv(1, max_vertices), ne(0, max_edges);
    const std::size_t n = nv(rng), m = ne(rng);
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<EdgeSpec> edges;
    for (std::size_t e = 0; e < m; ++e)
        edges.push_back({"e" + std::to_string(e), vertices[pick(rng)], vertices[pick(rng)]});
    return Graph::from_edge_list(edges, vertices);
}

std::uint64_t test_seed() {
    if (const char* s = std::getenv("COGRAPHIC_TEST_SEED")) return std::stoull(s);
    return 20240611;
}

}  // namespace oracle
