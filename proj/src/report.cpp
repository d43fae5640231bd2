#include "cographic/report.hpp"

#include <sstream>

#include "cographic/cycle_space.hpp"

namespace cographic::report {

Json chain_json(const Graph& g, const Chain1& c) {
    Json j = Json::object();
    for (EdgeIndex e = 0; e < c.size(); ++e)
        if (c[e] != 0) j[g.edge_id(e)] = c[e];
    return j;
}

Json orientation_json(const Graph& g, const Orientation& phi) {
    Json j = Json::object();
    for (EdgeIndex e = 0; e < phi.size(); ++e)
        if (phi.defined(e)) j[g.edge_id(e)] = phi.sign(e) > 0 ? "+" : "-";
    return j;
}

Json pair_json(const Graph& g, const TotCycPair& p) {
    Json removed = Json::array();
    for (EdgeIndex e : p.removed()) removed.push_back(g.edge_id(e));
    return {{"T", removed}, {"orientation", orientation_json(g, p.orientation())}};
}

Json circuit_json(const Graph& g, const OrientedCircuit& gamma) {
    Json j = Json::array();
    for (EdgeIndex e : gamma.support) j.push_back(g.edge_id(e) + (gamma.orientation.sign(e) > 0 ? "+" : "-"));
    return j;
}

namespace {

Json ids(const Graph& g, const EdgeSet& s) {
    Json j = Json::array();
    for (EdgeIndex e : s) j.push_back(g.edge_id(e));
    return j;
}

std::string rational_string(const lattice::Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << '/' << r.denominator();
    return out.str();
}

}  // namespace

Json graph_json(const Graph& g) {
    Json vertices = Json::array();
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) vertices.push_back(g.vertex_id(v));
    Json edges = Json::array();
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        edges.push_back({g.edge_id(e), g.vertex_id(g.source(e)), g.vertex_id(g.target(e))});
    return {{"vertices", vertices},
            {"edges", edges},
            {"betti1", betti1(g)},
            {"components", component_count(g)},
            {"separating_edges", ids(g, separating_edges(g))}};
}

Json orientations_json(const Graph& g, const Limits& limits) {
    Json tco = Json::array();
    for (const auto& phi : enumerate_tco(g, limits)) tco.push_back(orientation_json(g, phi));
    const OrientationPoset poset = build_orientation_poset(g, limits);
    Json maximal = Json::array();
    for (const auto& p : maximal_elements(poset)) maximal.push_back(pair_json(g, p));
    return {{"totally_cyclic_orientations", tco},
            {"count", tco.size()},
            {"poset", {{"size", poset.size()}, {"maximal_elements", maximal}}}};
}

Json circuits_json(const Graph& g, const Limits& limits) {
    const CycleBasis basis = fundamental_cycle_basis(g);
    Json list = Json::array();
    for (const auto& gamma : enumerate_oriented_circuits(g, limits)) {
        const Chain1 cls = circuit_class(gamma);
        list.push_back({{"circuit", circuit_json(g, gamma)},
                        {"class", chain_json(g, cls)},
                        {"basis_coordinates", basis.coordinates(cls)}});
    }
    Json basis_json = Json::array();
    for (const auto& b : basis.basis) basis_json.push_back(chain_json(g, b));
    return {{"count", list.size()}, {"circuits", list}, {"cycle_basis", basis_json}};
}

Json fan_json(const Fan& fan) {
    const Graph& g = fan.graph();
    Json cones = Json::array();
    for (std::size_t i = 0; i < fan.size(); ++i) {
        const Cone& k = fan.cones()[i];
        Json rays = Json::array();
        for (const auto& gamma : k.ray_circuits) rays.push_back(chain_json(g, circuit_class(gamma)));
        Json facet_labels = Json::array();
        for (auto f : fan.facets(i)) facet_labels.push_back(pair_json(g, fan.cones()[f].label));
        cones.push_back({{"label", pair_json(g, k.label)},
                         {"dimension", k.dimension},
                         {"voronoi_face_dim", k.voronoi_face_dim},
                         {"rays", rays},
                         {"facets", facet_labels}});
    }
    return {{"ambient_dimension", betti1(g)},
            {"cone_count", fan.size()},
            {"chamber_count", fan.chambers().size()},
            {"ray_count", fan.circuits().size()},
            {"cones", cones}};
}

Json semigroup_json(const Graph& g, const AffineSemigroup& s, const BinomialIdeal& ideal,
                    const ChamberMultiplicity& multiplicity) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < s.hilbert_basis.size(); ++i)
        basis.push_back({{"circuit", circuit_json(g, s.circuits[i])},
                         {"edge_coordinates", chain_json(g, s.hilbert_basis[i])},
                         {"lattice_coordinates", s.coordinates[i]}});
    Json lattice_basis = Json::array();
    for (const auto& b : s.lattice_basis.basis) lattice_basis.push_back(chain_json(g, b));

    const auto uni = is_unimodular(s);
    Json unimodular = {{"value", uni.unimodular}, {"witness", nullptr}};
    if (uni.witness)
        unimodular["witness"] = {{"columns_a", uni.witness->columns_a},
                                 {"minor_a", uni.witness->minor_a},
                                 {"columns_b", uni.witness->columns_b},
                                 {"minor_b", uni.witness->minor_b}};

    Json binomials = Json::array();
    for (const auto& b : ideal.generators) binomials.push_back({{"u", b.u}, {"v", b.v}});

    const auto gor = q_gorenstein(s);
    Json m = nullptr;
    if (gor.m) {
        m = Json::array();
        for (const auto& x : *gor.m) m.push_back(rational_string(x));
    }
    return {{"label", pair_json(g, s.label)},
            {"lattice_rank", s.lattice_rank()},
            {"lattice_basis", lattice_basis},
            {"hilbert_basis", basis},
            {"spans_lattice", spans_lattice(s)},
            {"unimodular", unimodular},
            {"facet_normals", s.facet_normals},
            {"toric_ideal", {{"degree_bound", ideal.degree_bound},
                             {"binomials", binomials},
                             {"homogeneous", is_homogeneous(ideal)}}},
            {"gorenstein", {{"q_gorenstein", gor.q_gorenstein},
                            {"gorenstein_integral", gor.gorenstein_integral},
                            {"m", m}}},
            {"multiplicity", {{"subdiagram_volume", multiplicity.subdiagram_volume},
                              {"hilbert_samuel", multiplicity.hilbert_samuel},
                              {"hilbert_samuel_values", multiplicity.hilbert_samuel_values}}}};
}

Json ring_json(const Graph& g, const RingReport& report, const RingPresentation& presentation) {
    Json primes = Json::array();
    for (const auto& p : report.minimal_prime_labels) primes.push_back(pair_json(g, p));
    Json chambers = Json::array();
    for (const auto& c : report.chambers)
        chambers.push_back({{"chamber", pair_json(g, c.chamber)},
                            {"subdiagram_volume", c.subdiagram_volume},
                            {"hilbert_samuel", c.hilbert_samuel}});
    Json generators = Json::array();
    for (const auto& gamma : presentation.generators) generators.push_back(circuit_json(g, gamma));
    Json quadrics = Json::array();
    for (auto [a, b] : presentation.discordance_quadrics) quadrics.push_back({a, b});
    Json chamber_ideals = Json::array();
    for (const auto& ci : presentation.chamber_binomials) {
        Json binomials = Json::array();
        for (const auto& b : ci.ideal.generators) binomials.push_back({{"u", b.u}, {"v", b.v}});
        chamber_ideals.push_back({{"chamber", pair_json(g, ci.chamber)},
                                  {"variables", ci.variables},
                                  {"degree_bound", ci.ideal.degree_bound},
                                  {"binomials", binomials}});
    }
    return {{"dimension", report.dimension},
            {"embedded_dimension", report.embedded_dimension},
            {"minimal_primes", primes},
            {"minimal_prime_count", primes.size()},
            {"normalization_components", primes},
            {"multiplicity", report.multiplicity},
            {"chamber_multiplicities", chambers},
            {"gorenstein_seminormal_slc", "asserted by theory, not computed"},
            {"presentation", {{"generators", generators},
                              {"discordance_quadrics", quadrics},
                              {"chamber_binomials", chamber_ideals}}}};
}

Json invariant_check_json(const TruncatedIsoCheck& check, unsigned max_degree) {
    return {{"degree", max_degree},
            {"passed", check.ok()},
            {"invariance_matches_boundary", check.invariance_matches_boundary},
            {"weight_bijective", check.weight_bijective},
            {"products_agree", check.products_agree},
            {"invariant_monomials", check.invariant_monomials},
            {"product_pairs", check.product_pairs}};
}

Json analyze(const Graph& g, const AnalyzeOptions& options) {
    const Fan fan = build_fan(g, options.limits);
    RingOptions ring_options{options.hs_horizon, options.limits};
    const RingReport ring = ring_report(g, ring_options);
    const RingPresentation presentation = present_ring(g, options.max_degree, options.limits);
    Json chambers = Json::array();
    for (std::size_t i = 0; i < ring.chambers.size(); ++i)
        chambers.push_back(semigroup_json(g, hilbert_basis(g, fan.circuits(), ring.chambers[i].chamber),
                                          presentation.chamber_binomials[i].ideal, ring.chambers[i]));
    const auto& poset = fan.labels();
    return {{"graph", graph_json(g)},
            {"orientation_poset", {{"size", poset.size()},
                                   {"maximal_elements", maximal_elements(poset).size()},
                                   {"totally_cyclic_orientations", enumerate_tco(g, options.limits).size()}}},
            {"fan", {{"cone_count", fan.size()},
                     {"chamber_count", fan.chambers().size()},
                     {"ray_count", fan.circuits().size()}}},
            {"ring", ring_json(g, ring, presentation)},
            {"chambers", chambers}};
}

}  // namespace cographic::report
