#include <doctest.h>

#include <algorithm>

#include "cographic/catalog.hpp"
#include "cographic/circuits.hpp"
#include "cographic/cycle_space.hpp"
#include "cographic/errors.hpp"
#include "cographic/graph_io.hpp"
#include "oracles.hpp"

using namespace cographic;

namespace {

OrientedCircuit circuit(std::vector<std::int8_t> s) {
    Orientation o = Orientation::from_signs(std::move(s));
    return {o.domain(), o};
}

Chain1 chain(std::vector<long long> c) { return Chain1(std::move(c)); }

}  // namespace

TEST_CASE("circuit counts") {
    CHECK(enumerate_oriented_circuits(catalog_graph("B3")).size() == 6);
    CHECK(enumerate_oriented_circuits(catalog_graph("FIG-NG")).size() == 20);
    CHECK(enumerate_oriented_circuits(catalog_graph("TREE3")).empty());
    CHECK(enumerate_oriented_circuits(catalog_graph("LOOP1")).size() == 2);
    CHECK(enumerate_oriented_circuits(catalog_graph("C7")).size() == 2);
    for (const auto& entry : catalog()) {
        const Graph g = parse_graph(entry.text);
        const CircuitSet cs = enumerate_oriented_circuits(g);
        CHECK_MESSAGE(cs.size() == 2 * oracle::count_circuit_supports(g), entry.name);
        CHECK(std::is_sorted(cs.begin(), cs.end()));
        for (const auto& gamma : cs) {
            CHECK(is_cycle(g, circuit_class(gamma)));
            CHECK(gamma.orientation.domain() == gamma.support);
        }
    }
}

TEST_CASE("circuit cap") {
    Limits tight;
    tight.circuit_edges = 3;
    CHECK_THROWS_AS(enumerate_oriented_circuits(catalog_graph("FIG-NG"), tight), CapacityError);
}

TEST_CASE("circuit classes of the FIG-NH reference chamber") {
    const Graph g = catalog_graph("FIG-NH");
    const TotCycPair chamber(g, Orientation::reference(6));
    const CircuitSet cs = compatible_circuits(g, chamber);
    REQUIRE(cs.size() == 5);
    std::vector<EdgeSet> supports;
    for (const auto& gamma : cs) supports.push_back(gamma.support);
    const std::vector<EdgeSet> expected{{0, 1, 2}, {0, 3}, {1, 5}, {2, 4}, {3, 4, 5}};
    CHECK(supports == expected);
    // [γ1] = φ(e1) + φ(e4)
    CHECK(circuit_class(cs[1]) == chain({1, 0, 0, 1, 0, 0}));
}

TEST_CASE("concordance") {
    const OrientedCircuit a = circuit({1, 0, -1});
    const OrientedCircuit b = circuit({0, 1, -1});
    const OrientedCircuit c = circuit({0, -1, 1});
    CHECK(concordant(a, b));
    CHECK_FALSE(concordant(a, c));
    CHECK(concordant(a, a));
    CHECK_FALSE(concordant(a, a.reversed()));
    CHECK(concordant(circuit({1, -1, 0}), circuit({0, 0, 0})));
}

TEST_CASE("compatible circuits of a B3 chamber") {
    const Graph g = catalog_graph("B3");
    const TotCycPair p(g, Orientation::from_signs({1, 1, -1}));
    const CircuitSet cs = compatible_circuits(g, p);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == circuit({1, 0, -1}));
    CHECK(cs[1] == circuit({0, 1, -1}));
    CHECK(support_orientation_of(g, cs) == p);
    CHECK(support_orientation_of(g, {}) == TotCycPair::minimum(g));
    CHECK(compatible_circuits(g, TotCycPair::minimum(g)).empty());
}

TEST_CASE("decomposition of the FIG-NH relation") {
    const Graph g = catalog_graph("FIG-NH");
    const CircuitSet cs = compatible_circuits(g, TotCycPair(g, Orientation::reference(6)));
    const Chain1 lhs = circuit_class(cs[1]) + circuit_class(cs[2]) + circuit_class(cs[3]);
    const Chain1 rhs = circuit_class(cs[0]) + circuit_class(cs[4]);
    CHECK(lhs == rhs);
    const auto parts = decompose_cycle(g, lhs);
    Chain1 sum(g.num_edges());
    for (const auto& [gamma, k] : parts) {
        CHECK(k > 0);
        sum += k * circuit_class(gamma);
        for (EdgeIndex e : gamma.support) CHECK(gamma.orientation.sign(e) * lhs[e] > 0);
    }
    CHECK(sum == lhs);
    CHECK(decompose_cycle(g, Chain1(6)).empty());
    CHECK_THROWS_AS(decompose_cycle(g, chain({1, 0, 0, 0, 0, 0})), std::invalid_argument);
}
