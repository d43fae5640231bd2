#include "cographic/torus_invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cographic/cycle_space.hpp"
#include "cographic/ring.hpp"

namespace cographic {

unsigned OrientedMonomial::degree() const {
    unsigned d = 0;
    for (auto x : forward) d += x;
    for (auto x : backward) d += x;
    return d;
}

bool OrientedMonomial::is_zero_in_quotient() const {
    for (std::size_t e = 0; e < forward.size(); ++e)
        if (forward[e] && backward[e]) return true;
    return false;
}

Chain1 OrientedMonomial::weight() const {
    Chain1 c(forward.size());
    for (std::size_t e = 0; e < forward.size(); ++e)
        c[e] = static_cast<long long>(forward[e]) - static_cast<long long>(backward[e]);
    return c;
}

std::vector<long long> OrientedMonomial::torus_character(const Graph& g) const {
    std::vector<long long> chi(g.num_vertices(), 0);
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
        chi[g.source(e)] += forward[e];
        chi[g.target(e)] -= forward[e];
        chi[g.target(e)] += backward[e];
        chi[g.source(e)] -= backward[e];
    }
    return chi;
}

namespace {

// Every monomial of degree ≤ D (including those that vanish in A(Γ)).
void for_each_monomial(std::size_t num_edges, unsigned max_degree,
                       const std::function<void(const OrientedMonomial&)>& visit) {
    OrientedMonomial mono{std::vector<unsigned>(num_edges, 0), std::vector<unsigned>(num_edges, 0)};
    const std::size_t vars = 2 * num_edges;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == vars) {
            visit(mono);
            return;
        }
        auto& slot = i < num_edges ? mono.forward[i] : mono.backward[i - num_edges];
        for (unsigned x = 0; x <= left; ++x) {
            slot = x;
            rec(i + 1, left - x);
        }
        slot = 0;
    };
    rec(0, max_degree);
}

bool all_zero(const std::vector<long long>& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

}  // namespace

std::vector<OrientedMonomial> invariant_monomial_basis(const Graph& g, unsigned max_degree) {
    std::vector<OrientedMonomial> out;
    for_each_monomial(g.num_edges(), max_degree, [&](const OrientedMonomial& m) {
        if (!m.is_zero_in_quotient() && all_zero(m.torus_character(g))) out.push_back(m);
    });
    return out;
}

TruncatedIsoCheck check_iso_truncated(const Graph& g, unsigned max_degree) {
    TruncatedIsoCheck check;
    for_each_monomial(g.num_edges(), max_degree, [&](const OrientedMonomial& m) {
        if (m.is_zero_in_quotient()) return;
        if (all_zero(m.torus_character(g)) != is_cycle(g, m.weight())) check.invariance_matches_boundary = false;
    });

    const auto invariants = invariant_monomial_basis(g, max_degree);
    check.invariant_monomials = invariants.size();

    // Cycles with Σ|c(e)| ≤ D from fundamental-basis coordinates in [−D, D]^b1.
    std::set<Chain1> cycles;
    const CycleBasis basis = fundamental_cycle_basis(g);
    const long long bound = max_degree;
    std::vector<long long> coords(basis.rank(), -bound);
    if (basis.rank() == 0) {
        cycles.insert(Chain1(g.num_edges()));
    } else {
        for (;;) {
            Chain1 c = basis.from_coordinates(coords);
            if (c.l1_norm() <= bound) cycles.insert(std::move(c));
            std::size_t k = 0;
            while (k < coords.size() && coords[k] == bound) coords[k++] = -bound;
            if (k == coords.size()) break;
            ++coords[k];
        }
    }
    std::set<Chain1> weights;
    for (const auto& m : invariants) weights.insert(m.weight());
    check.weight_bijective = weights.size() == invariants.size() && weights == cycles;

    for (const auto& a : invariants)
        for (const auto& b : invariants) {
            if (a.degree() + b.degree() > max_degree) continue;
            ++check.product_pairs;
            OrientedMonomial prod = a;
            for (std::size_t e = 0; e < prod.forward.size(); ++e) {
                prod.forward[e] += b.forward[e];
                prod.backward[e] += b.backward[e];
            }
            const auto ring_prod = multiply_monomials(g, a.weight(), b.weight());
            if (prod.is_zero_in_quotient()) {
                if (ring_prod) check.products_agree = false;
            } else if (!ring_prod || *ring_prod != prod.weight()) {
                check.products_agree = false;
            }
        }
    return check;
}

}  // namespace cographic
