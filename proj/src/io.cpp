#include "paspt/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace paspt {

std::string format_weight(Weight w) {
    char buf[64];
    if (w == static_cast<Weight>(static_cast<long long>(w))) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(w));
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", w);
    }
    return buf;
}

WeightedGraph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int n = 0;
    bool n_given = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (!(ls >> n)) throw std::runtime_error("edge list: bad n line");
            n_given = true;
            continue;
        }
        if (first[0] == '#' || first[0] == 'c') continue;
        Edge e;
        e.u = std::stoi(first);
        if (!(ls >> e.v >> e.w)) throw std::runtime_error("edge list: bad edge line: " + line);
        if (!n_given) n = std::max({n, e.u + 1, e.v + 1});
        edges.push_back(e);
    }
    return WeightedGraph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
    out << "n " << g.num_vertices() << "\n";
    for (const Edge& e : g.edges())
        out << e.u << " " << e.v << " " << format_weight(e.w) << "\n";
}

WeightedGraph read_dimacs(std::istream& in) {
    int n = -1;
    std::map<std::pair<int, int>, Weight> best;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        char tag;
        if (!(ls >> tag)) continue;
        if (tag == 'c') continue;
        if (tag == 'p') {
            std::string kind;
            long long m;
            if (!(ls >> kind >> n >> m)) throw std::runtime_error("dimacs: bad p line");
            continue;
        }
        if (tag == 'a') {
            int u, v;
            Weight w;
            if (!(ls >> u >> v >> w)) throw std::runtime_error("dimacs: bad a line: " + line);
            if (u == v) continue;
            auto key = std::minmax(u - 1, v - 1);
            auto [it, fresh] = best.emplace(key, w);
            if (!fresh && w < it->second) it->second = w;
        }
    }
    if (n < 0) throw std::runtime_error("dimacs: missing p line");
    std::vector<Edge> edges;
    edges.reserve(best.size());
    for (const auto& [key, w] : best) edges.push_back({key.first, key.second, w});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".gr") == 0)
        return read_dimacs(in);
    return read_edge_list(in);
}

void save_edge_list(const std::string& path, const WeightedGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_edge_list(out, g);
}

}  // namespace paspt
