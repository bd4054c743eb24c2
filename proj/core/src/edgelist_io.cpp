#include "matchdecay/edgelist_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace matchdecay {

EdgeListData read_edge_list(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r\n") != std::string::npos && line[0] != '#') return true;
        }
        return false;
    };
    if (!next_line()) throw std::runtime_error("edge list: empty input");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw std::runtime_error("edge list: bad header, expected 'n m'");

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<double> weights;
    bool weighted = false;
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v)) throw std::runtime_error("edge list: bad edge line '" + line + "'");
        double w;
        bool has_w = static_cast<bool>(row >> w);
        if (i == 0) weighted = has_w;
        else if (has_w != weighted)
            throw std::runtime_error("edge list: mixed weighted and unweighted lines");
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
        if (weighted) weights.push_back(w);
    }
    EdgeListData out;
    out.graph = Graph::from_edges(static_cast<int>(n), edges);
    if (weighted) out.weights = WeightAssignment(std::move(weights));
    return out;
}

EdgeListData read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("edge list: cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const WeightAssignment* weights) {
    out << g.n_vertices() << ' ' << g.n_edges() << '\n';
    char buf[64];
    for (EdgeId e = 0; e < g.n_edges(); ++e) {
        const Edge& ed = g.edge(e);
        out << ed.u << ' ' << ed.v;
        if (weights) {
            std::snprintf(buf, sizeof(buf), "%.17g", (*weights)[e]);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

}  // namespace matchdecay
