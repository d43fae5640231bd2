// Command-line front end. JSON goes to stdout, a short human summary to stderr.
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 capacity, 4 check failed / rings differ.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "cographic/catalog.hpp"
#include "cographic/errors.hpp"
#include "cographic/graph_io.hpp"
#include "cographic/report.hpp"
#include "cographic/torelli.hpp"

using namespace cographic;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_capacity = 3;
constexpr int exit_failed = 4;

// "catalog:B3" loads a bundled example instead of a file.
Graph load(const std::string& source) {
    constexpr std::string_view prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) {
        try {
            return catalog_graph(source.substr(prefix.size()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, e.what());
        }
    }
    try {
        return read_graph_file(source);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

void emit(const report::Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cographic toric face rings of finite multigraphs"};
    app.require_subcommand(1);

    report::AnalyzeOptions opts;
    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--max-poset-edges", opts.limits.poset_edges, "edge cap for poset and fan enumeration")
            ->capture_default_str();
        cmd->add_option("--max-orientation-edges", opts.limits.orientation_edges,
                        "edge cap for orientation enumeration")
            ->capture_default_str();
        cmd->add_option("--max-circuit-edges", opts.limits.circuit_edges, "edge cap for circuit enumeration")
            ->capture_default_str();
    };

    std::string path, other_path;
    unsigned degree = 3;

    auto* analyze = app.add_subcommand("analyze", "full report: poset, fan, ring, per-chamber semigroups");
    analyze->add_option("graph", path, "graph file or catalog:<NAME>")->required();
    analyze->add_option("--degree", opts.max_degree, "binomial degree bound")->capture_default_str();
    analyze->add_option("--hs-horizon", opts.hs_horizon, "Hilbert-Samuel horizon (0 = dim + 6)")
        ->capture_default_str();
    add_limits(analyze);

    auto* orientations = app.add_subcommand("orientations", "totally cyclic orientations and the poset");
    orientations->add_option("graph", path)->required();
    add_limits(orientations);

    auto* circuits = app.add_subcommand("circuits", "oriented circuits and their classes");
    circuits->add_option("graph", path)->required();
    add_limits(circuits);

    auto* fan = app.add_subcommand("fan", "cones of the cographic fan");
    fan->add_option("graph", path)->required();
    add_limits(fan);

    auto* ring = app.add_subcommand("ring", "ring invariants and presentation");
    ring->add_option("graph", path)->required();
    ring->add_option("--degree", opts.max_degree, "binomial degree bound")->capture_default_str();
    ring->add_option("--hs-horizon", opts.hs_horizon, "Hilbert-Samuel horizon (0 = dim + 6)")
        ->capture_default_str();
    add_limits(ring);

    auto* compare = app.add_subcommand("compare", "decide whether two graphs have isomorphic rings");
    compare->add_option("graph", path, "first graph")->required();
    compare->add_option("other", other_path, "second graph")->required();
    add_limits(compare);

    auto* verify = app.add_subcommand("verify-invariant-ring", "truncated check of the torus-invariant ring");
    verify->add_option("graph", path)->required();
    verify->add_option("--degree", degree, "degree bound")->capture_default_str();

    std::string example_name;
    auto* examples = app.add_subcommand("examples", "list bundled graphs, or print one");
    examples->add_option("--name", example_name, "print this graph in file format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*examples) {
            if (!example_name.empty()) {
                std::cout << to_text(catalog_graph(example_name));
                return 0;
            }
            report::Json list = report::Json::array();
            for (const auto& entry : catalog())
                list.push_back({{"name", entry.name}, {"description", entry.description}, {"graph", entry.text}});
            emit(list);
            return 0;
        }

        const Graph g = load(path);
        std::cerr << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges, b1 = " << betti1(g)
                  << '\n';

        if (*analyze) {
            const auto j = report::analyze(g, opts);
            std::cerr << "dim " << j["ring"]["dimension"] << ", embdim " << j["ring"]["embedded_dimension"]
                      << ", minimal primes " << j["ring"]["minimal_prime_count"] << ", multiplicity "
                      << j["ring"]["multiplicity"] << '\n';
            emit(j);
        } else if (*orientations) {
            emit(report::orientations_json(g, opts.limits));
        } else if (*circuits) {
            emit(report::circuits_json(g, opts.limits));
        } else if (*fan) {
            emit(report::fan_json(build_fan(g, opts.limits)));
        } else if (*ring) {
            const RingReport r = ring_report(g, {opts.hs_horizon, opts.limits});
            emit(report::ring_json(g, r, present_ring(g, opts.max_degree, opts.limits)));
        } else if (*compare) {
            const Graph h = load(other_path);
            const Graph g3 = three_edge_connectivization(g, PairPolicy::lower_edge, opts.limits);
            const Graph h3 = three_edge_connectivization(h, PairPolicy::lower_edge, opts.limits);
            const bool same = cyclically_equivalent(g3, h3, opts.limits);
            std::cerr << (same ? "same cographic ring" : "different cographic rings") << '\n';
            emit({{"same_ring", same}, {"g_class_size", g3.num_edges()}, {"h_class_size", h3.num_edges()}});
            return same ? 0 : exit_failed;
        } else if (*verify) {
            const auto check = check_iso_truncated(g, degree);
            std::cerr << (check.ok() ? "passed" : "FAILED") << " at degree " << degree << '\n';
            emit(report::invariant_check_json(check, degree));
            return check.ok() ? 0 : exit_failed;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const CapacityError& e) {
        std::cerr << e.what() << '\n';
        return exit_capacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return 0;
}
