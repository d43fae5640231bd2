#include "cographic/fan.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cographic {

namespace {

void require_cycle(const Graph& g, const Chain1& c) {
    if (!is_cycle(g, c)) throw std::invalid_argument("expected a cycle");
}

bool sign_conforms(const Orientation& phi, const Chain1& c) {
    for (EdgeIndex e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        if (!phi.defined(e) || (c[e] > 0) != (phi.sign(e) > 0)) return false;
    }
    return true;
}

}  // namespace

bool cone_contains(const Graph& g, const TotCycPair& cone, const Chain1& c) {
    require_cycle(g, c);
    return sign_conforms(cone.orientation(), c);
}

bool common_cone(const Graph& g, const Chain1& c, const Chain1& d) {
    require_cycle(g, c);
    require_cycle(g, d);
    for (EdgeIndex e = 0; e < c.size(); ++e)
        if (c[e] * d[e] < 0) return false;
    return true;
}

TotCycPair cone_of(const Graph& g, const Chain1& c) {
    require_cycle(g, c);
    return TotCycPair(g, canonical_form(g, c).orientation);
}

ConeDimension cone_dimension(const Graph& g, const TotCycPair& cone) {
    const std::size_t d = detail::betti1(g, cone.remaining_mask());
    return {d, betti1(g) - d};
}

std::vector<Chain1> extremal_rays(const Graph& g, const TotCycPair& cone) {
    std::vector<Chain1> rays;
    for (const auto& gamma : compatible_circuits(g, cone)) rays.push_back(circuit_class(gamma));
    return rays;
}

std::vector<Facet> facets(const Graph& g, const TotCycPair& cone) {
    const EdgeMask span_mask = cone.remaining_mask();
    const std::size_t dim = detail::betti1(g, span_mask);
    const CycleBasis basis = fundamental_cycle_basis(g, span_mask);
    std::vector<Facet> result;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        if (!cone.orientation().defined(e)) continue;
        Orientation cut = cone.orientation();
        cut.unset(e);
        TotCycPair face = restrict_to_totally_cyclic(g, cut);
        if (dim == 0 || detail::betti1(g, face.remaining_mask()) != dim - 1) continue;
        lattice::IntVector normal;
        for (const auto& b : basis.basis) normal.push_back(cone.orientation().sign(e) * b[e]);
        const long long k = lattice::gcd_of(normal);
        for (auto& x : normal) x /= k;
        auto same = [&](const Facet& f) { return f.normal == normal; };
        if (std::find_if(result.begin(), result.end(), same) != result.end()) continue;
        result.push_back({std::move(face), std::move(normal)});
    }
    return result;
}

std::vector<std::size_t> Fan::chambers() const {
    const std::size_t b1 = betti1(graph_);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (cones_[i].dimension == b1) out.push_back(i);
    return out;
}

std::vector<std::size_t> Fan::facets(std::size_t i) const {
    std::vector<std::size_t> out;
    const std::size_t dim = cones_.at(i).dimension;
    if (dim == 0) return out;
    for (std::size_t j = 0; j < cones_.size(); ++j)
        if (j != i && inclusion_.leq[j][i] && cones_[j].dimension == dim - 1) out.push_back(j);
    return out;
}

Fan build_fan(const Graph& g, const Limits& limits) {
    Fan fan;
    fan.graph_ = g;
    fan.poset_ = build_orientation_poset(g, limits);
    fan.circuits_ = enumerate_oriented_circuits(g, limits);
    const std::size_t b1 = betti1(g);
    for (const auto& label : fan.poset_.elements()) {
        const std::size_t d = detail::betti1(g, label.remaining_mask());
        fan.cones_.push_back({label, compatible_circuits(fan.circuits_, label), d, b1 - d});
    }
    const std::size_t n = fan.cones_.size();
    fan.inclusion_.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool inside = true;
            for (const auto& gamma : fan.cones_[i].ray_circuits)
                if (!sign_conforms(fan.cones_[j].label.orientation(), circuit_class(gamma))) {
                    inside = false;
                    break;
                }
            fan.inclusion_.leq[i][j] = inside;
        }
    return fan;
}

FinitePoset as_finite_poset(const OrientationPoset& p) { return {p.relation()}; }

}  // namespace cographic
