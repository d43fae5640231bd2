#include "cographic/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "cographic/errors.hpp"

namespace cographic {

Graph parse_graph(std::string_view text) {
    std::vector<std::string> vertices;
    std::unordered_set<std::string> seen_vertices;
    std::vector<EdgeSpec> edges;
    std::unordered_set<std::string> seen_edges;
    auto mention = [&](const std::string& v) {
        if (seen_vertices.insert(v).second) vertices.push_back(v);
    };

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "vertex") {
            if (tok.size() != 2) throw ParseError(lineno, "expected 'vertex <id>'");
            mention(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <id> <source> <target>'");
            if (!seen_edges.insert(tok[1]).second)
                throw ParseError(lineno, "duplicate edge id '" + tok[1] + "'");
            mention(tok[2]);
            mention(tok[3]);
            edges.push_back({tok[1], tok[2], tok[3]});
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    return Graph::from_edge_list(edges, vertices);
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) out << "vertex " << g.vertex_id(v) << '\n';
    for (EdgeIndex e = 0; e < g.num_edges(); ++e)
        out << "edge " << g.edge_id(e) << ' ' << g.vertex_id(g.source(e)) << ' '
            << g.vertex_id(g.target(e)) << '\n';
    return out.str();
}

}  // namespace cographic
