#include "sbe/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sbe {

std::string write_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

void write_dimacs(std::ostream& out, const Graph& g) { out << write_dimacs(g); }

void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << write_dimacs(g);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

} // namespace

Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::int64_t m = -1;
    std::vector<std::pair<int, int>> edge_list;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (n < 0) {
            std::string fmt;
            if (tag != "p" || !(iss >> fmt >> n >> m) || fmt != "edge")
                fail(lineno, "expected header 'p edge <n> <m>'");
            if (n < 1) fail(lineno, "vertex count must be at least 1");
            if (m < 0 || m > Graph::max_edges(n)) fail(lineno, "edge count out of range");
            edge_list.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (tag != "e") fail(lineno, "expected edge line 'e <u> <v>'");
        int u = 0, v = 0;
        if (!(iss >> u >> v)) fail(lineno, "expected edge line 'e <u> <v>'");
        if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "edge endpoint out of range");
        if (u == v) fail(lineno, "self-loop rejected");
        if (static_cast<std::int64_t>(edge_list.size()) == m) fail(lineno, "more edges than declared");
        edge_list.emplace_back(u - 1, v - 1);
    }
    if (n < 0) fail(lineno, "missing 'p edge' header");
    if (static_cast<std::int64_t>(edge_list.size()) != m)
        fail(lineno, "declared " + std::to_string(m) + " edges but found " +
                         std::to_string(edge_list.size()));
    try {
        return Graph(n, edge_list);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid graph: ") + e.what());
    }
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return read_dimacs(in);
}

} // namespace sbe
