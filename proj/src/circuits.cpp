#include "cographic/circuits.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "cographic/cycle_space.hpp"

namespace cographic {

bool operator<(const OrientedCircuit& a, const OrientedCircuit& b) {
    if (a.support != b.support) return a.support < b.support;
    const EdgeIndex low = *a.support.begin();
    return a.orientation.sign(low) > b.orientation.sign(low);
}

CircuitSet enumerate_oriented_circuits(const Graph& g, const Limits& limits) {
    const std::size_t m = g.num_edges();
    if (m > limits.circuit_edges) throw CapacityError("circuit_edges", limits.circuit_edges, m);

    std::vector<std::vector<std::pair<VertexIndex, OrientedEdge>>> adj(g.num_vertices());
    for (EdgeIndex e = 0; e < m; ++e) {
        if (g.is_loop(e)) continue;
        adj[g.source(e)].push_back({g.target(e), {e, Dir::forward}});
        adj[g.target(e)].push_back({g.source(e), {e, Dir::backward}});
    }

    CircuitSet found;
    auto emit = [&](const std::vector<OrientedEdge>& walk) {
        OrientedCircuit c{EdgeSet{}, Orientation(m)};
        for (auto r : walk) {
            c.support.insert(r.edge);
            c.orientation.set(r.edge, r.dir);
        }
        found.push_back(c.reversed());
        found.push_back(std::move(c));
    };

    for (EdgeIndex anchor = 0; anchor < m; ++anchor) {
        if (g.is_loop(anchor)) {
            emit({{anchor, Dir::forward}});
            continue;
        }
        // Simple paths from t(anchor) back to s(anchor) through edges above the anchor.
        const VertexIndex start = g.source(anchor);
        std::vector<bool> on_path(g.num_vertices(), false);
        std::vector<OrientedEdge> walk{{anchor, Dir::forward}};
        on_path[start] = on_path[g.target(anchor)] = true;
        std::function<void(VertexIndex)> extend = [&](VertexIndex v) {
            for (auto [w, r] : adj[v]) {
                if (r.edge <= anchor) continue;
                if (w == start) {
                    walk.push_back(r);
                    emit(walk);
                    walk.pop_back();
                } else if (!on_path[w]) {
                    on_path[w] = true;
                    walk.push_back(r);
                    extend(w);
                    walk.pop_back();
                    on_path[w] = false;
                }
            }
        };
        extend(g.target(anchor));
    }
    std::sort(found.begin(), found.end());
    return found;
}

Chain1 circuit_class(const OrientedCircuit& gamma) { return gamma.orientation.as_chain(); }

bool concordant(const OrientedCircuit& gamma, const OrientedCircuit& delta) {
    for (EdgeIndex e : gamma.support)
        if (delta.orientation.defined(e) && delta.orientation.sign(e) != gamma.orientation.sign(e))
            return false;
    return true;
}

CircuitSet compatible_circuits(const CircuitSet& all, const TotCycPair& p) {
    CircuitSet out;
    for (const auto& c : all)
        if (c.orientation.is_restriction_of(p.orientation())) out.push_back(c);
    return out;
}

CircuitSet compatible_circuits(const Graph& g, const TotCycPair& p) {
    Limits unlimited;
    unlimited.circuit_edges = std::numeric_limits<std::size_t>::max();
    return compatible_circuits(enumerate_oriented_circuits(g, unlimited), p);
}

namespace {

// Directed cycle through the lowest edge of the support of c, following the
// sign pattern of c. Returns oriented edges in walk order.
std::vector<OrientedEdge> find_directed_cycle(const Graph& g, const Chain1& c) {
    const auto support = c.support();
    const EdgeIndex first = *support.begin();
    const OrientedEdge head{first, c[first] > 0 ? Dir::forward : Dir::backward};
    if (g.is_loop(first)) return {head};

    std::vector<std::vector<OrientedEdge>> out(g.num_vertices());
    for (EdgeIndex e : support)
        if (e != first && !g.is_loop(e))
            out[g.source({e, c[e] > 0 ? Dir::forward : Dir::backward})].push_back(
                {e, c[e] > 0 ? Dir::forward : Dir::backward});

    const VertexIndex goal = g.source(head);
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<OrientedEdge> walk{head};
    std::function<bool(VertexIndex)> search = [&](VertexIndex v) {
        if (v == goal) return true;
        seen[v] = true;
        for (auto r : out[v]) {
            const VertexIndex w = g.target(r);
            if (seen[w]) continue;
            walk.push_back(r);
            if (search(w)) return true;
            walk.pop_back();
        }
        return false;
    };
    if (!search(g.target(head))) throw std::logic_error("sign-consistent cycle without a directed cycle");
    return walk;
}

}  // namespace

std::vector<std::pair<OrientedCircuit, long long>> decompose_cycle(const Graph& g, const Chain1& c) {
    if (!is_cycle(g, c)) throw std::invalid_argument("decompose_cycle needs a cycle");
    std::map<OrientedCircuit, long long> parts;
    Chain1 rest = c;
    while (!rest.is_zero()) {
        const auto walk = find_directed_cycle(g, rest);
        OrientedCircuit gamma{EdgeSet{}, Orientation(g.num_edges())};
        long long times = std::numeric_limits<long long>::max();
        for (auto r : walk) {
            gamma.support.insert(r.edge);
            gamma.orientation.set(r.edge, r.dir);
            times = std::min(times, std::llabs(rest[r.edge]));
        }
        rest -= times * circuit_class(gamma);
        parts[gamma] += times;
    }
    return {parts.begin(), parts.end()};
}

TotCycPair support_orientation_of(const Graph& g, const CircuitSet& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (!concordant(sigma[i], sigma[j]))
                throw std::invalid_argument("support_orientation_of needs pairwise concordant circuits");
    Orientation phi(g.num_edges());
    for (const auto& gamma : sigma)
        for (EdgeIndex e : gamma.support) phi.set(e, *gamma.orientation.at(e));
    return TotCycPair(g, std::move(phi));
}

}  // namespace cographic
