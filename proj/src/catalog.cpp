#include "cographic/catalog.hpp"

#include <stdexcept>

#include "cographic/graph_io.hpp"

namespace cographic {

namespace {

std::string cycle_text(std::size_t n) {
    std::string text;
    for (std::size_t i = 1; i <= n; ++i)
        text += "edge e" + std::to_string(i) + " " + std::to_string(i) + " " + std::to_string(i % n + 1) + "\n";
    return text;
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c{
        {"TREE3", "path on three vertices", "edge a 1 2\nedge b 2 3\n"},
        {"LOOP1", "one vertex with a loop", "edge l 1 1\n"},
        {"B2", "two vertices joined by two parallel edges", "edge a 1 2\nedge b 1 2\n"},
        {"B3", "two vertices joined by three parallel edges", "edge e1 1 2\nedge e2 1 2\nedge e3 1 2\n"},
    };
    for (std::size_t n = 3; n <= 7; ++n)
        c.push_back({"C" + std::to_string(n), "cycle on " + std::to_string(n) + " vertices", cycle_text(n)});
    // The last three are written so that the reference orientation is totally cyclic.
    c.push_back({"THETA2", "triangle with every side doubled (non-unimodular Hilbert basis)",
                 "vertex top\nvertex left\nvertex right\n"
                 "edge e1_0 left top\nedge e1_1 left top\n"
                 "edge e2_0 top right\nedge e2_1 top right\n"
                 "edge e3_0 right left\nedge e3_1 right left\n"});
    c.push_back({"FIG-NG", "two vertices, five parallel edges (chamber ring not Q-Gorenstein)",
                 "vertex v1\nvertex v2\n"
                 "edge e1 v1 v2\nedge e2 v1 v2\n"
                 "edge e3 v2 v1\nedge e4 v2 v1\nedge e5 v2 v1\n"});
    c.push_back({"FIG-NH", "triangle with every side doubled, anti-parallel pairs (non-homogeneous toric ideal)",
                 "vertex top\nvertex left\nvertex right\n"
                 "edge e1 left top\nedge e2 top right\nedge e3 right left\n"
                 "edge e4 top left\nedge e5 left right\nedge e6 right top\n"});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

Graph catalog_graph(std::string_view name) {
    for (const auto& entry : catalog())
        if (entry.name == name) return parse_graph(entry.text);
    throw std::invalid_argument("no catalog graph named '" + std::string(name) + "'");
}

Graph cycle_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cycle_graph needs n >= 1");
    return parse_graph(cycle_text(n));
}

}  // namespace cographic
