#include <doctest.h>

#include "cographic/catalog.hpp"
#include "cographic/cycle_space.hpp"
#include "cographic/graph_io.hpp"

using namespace cographic;

namespace {

Chain1 chain_of(const Graph& g, std::initializer_list<std::pair<const char*, long long>> terms) {
    Chain1 c(g.num_edges());
    for (auto [id, k] : terms) c[g.edge_index(id)] += k;
    return c;
}

}  // namespace

TEST_CASE("boundary and cycles") {
    const Graph g = catalog_graph("THETA2");
    const Chain1 gamma = chain_of(g, {{"e1_0", 1}, {"e2_0", 1}, {"e3_0", 1}});
    CHECK(is_cycle(g, gamma));
    CHECK_FALSE(is_cycle(g, chain_of(g, {{"e1_0", 1}, {"e2_0", 1}})));
    CHECK(is_cycle(g, chain_of(g, {{"e1_0", 1}, {"e1_1", -1}})));
    CHECK(is_cycle(g, Chain1(g.num_edges())));
    const Chain0 d = boundary(g, chain_of(g, {{"e1_0", 1}}));
    CHECK(d.coefficients == std::vector<long long>{1, -1, 0});  // top, left, right
    CHECK(is_cycle(catalog_graph("LOOP1"), Chain1(std::vector<long long>{5})));
    CHECK_THROWS_AS(boundary(g, Chain1(3)), std::invalid_argument);
}

TEST_CASE("inner product on oriented edges") {
    const std::size_t m = 2;
    const Chain1 a_fwd = Chain1::unit(m, {0, Dir::forward});
    const Chain1 a_bwd = Chain1::unit(m, {0, Dir::backward});
    const Chain1 b_fwd = Chain1::unit(m, {1, Dir::forward});
    CHECK(inner_product(a_fwd, b_fwd) == 0);
    CHECK(inner_product(a_fwd, a_bwd) == -1);
    CHECK(inner_product(a_fwd, a_fwd) == 1);
    CHECK(inner_product(Chain1(std::vector<long long>{2, -3}), Chain1(std::vector<long long>{2, -3})) == 13);
    CHECK_THROWS_AS(inner_product(Chain1(2), Chain1(3)), std::invalid_argument);
}

TEST_CASE("fundamental cycle bases") {
    const Graph b3 = catalog_graph("B3");
    const CycleBasis cb = fundamental_cycle_basis(b3);
    REQUIRE(cb.rank() == 2);
    CHECK(cb.spanning_forest == EdgeSet{0});
    CHECK(cb.coforest == std::vector<EdgeIndex>{1, 2});
    for (const auto& c : cb.basis) {
        CHECK(is_cycle(b3, c));
        CHECK(c.support().size() == 2);
    }
    CHECK(cb.basis[0] == Chain1(std::vector<long long>{-1, 1, 0}));

    const Graph theta = catalog_graph("THETA2");
    const CycleBasis tb = fundamental_cycle_basis(theta);
    CHECK(tb.rank() == 4);
    const Chain1 gamma = chain_of(theta, {{"e1_1", 1}, {"e2_1", 1}, {"e3_0", 1}});
    CHECK(tb.from_coordinates(tb.coordinates(gamma)) == gamma);

    CHECK(fundamental_cycle_basis(catalog_graph("TREE3")).rank() == 0);
    CHECK(fundamental_cycle_basis(catalog_graph("LOOP1")).basis[0] == Chain1(std::vector<long long>{1}));
}

TEST_CASE("cycle basis on a masked subgraph") {
    const Graph g = catalog_graph("THETA2");
    EdgeMask mask = g.all_edges();
    mask[g.edge_index("e1_0")] = false;
    mask[g.edge_index("e2_0")] = false;
    const CycleBasis cb = fundamental_cycle_basis(g, mask);
    CHECK(cb.rank() == 2);
    for (const auto& c : cb.basis) {
        CHECK(c[g.edge_index("e1_0")] == 0);
        CHECK(c[g.edge_index("e2_0")] == 0);
    }
}

TEST_CASE("canonical form") {
    const Graph g = catalog_graph("B3");
    const Chain1 c(std::vector<long long>{2, 1, -3});
    const CanonicalForm cf = canonical_form(g, c);
    CHECK(cf.support == EdgeSet{0, 1, 2});
    CHECK(cf.orientation.sign(2) == -1);
    CHECK(cf.multiplicity == std::vector<long long>{2, 1, 3});
    CHECK(cf.reconstruct() == c);

    const CanonicalForm zero = canonical_form(g, Chain1(3));
    CHECK(zero.support.empty());
    CHECK(zero.reconstruct().is_zero());
}
