#include "c4c/graph6.hpp"

#include <fstream>
#include <sstream>

namespace c4c {

std::string to_graph6(const CubicGraph& g) {
    const int n = g.order();
    if (n > 62) throw GraphError(ErrorCode::BadInput, "graph6 short form caps at 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    // upper-triangle bits in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int bit = 0;
    char cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = static_cast<char>(cur << 1 | (g.has_edge(i, j) ? 1 : 0));
            if (++bit == 6) {
                out.push_back(static_cast<char>(cur + 63));
                bit = 0;
                cur = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>((cur << (6 - bit)) + 63));
    return out;
}

CubicGraph from_graph6(const std::string& line) {
    if (line.empty()) throw GraphError(ErrorCode::BadInput, "empty graph6 line");
    size_t pos = 0;
    if (line[0] == '>') {  // optional ">>graph6<<" header
        pos = line.find("<<");
        if (pos == std::string::npos) throw GraphError(ErrorCode::BadInput, "bad graph6 header");
        pos += 2;
    }
    int n = line[pos] - 63;
    if (n < 0 || n > 62) throw GraphError(ErrorCode::BadInput, "unsupported graph6 order");
    ++pos;
    std::vector<Edge> edges;
    int bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                if (pos >= line.size()) throw GraphError(ErrorCode::BadInput, "truncated graph6");
                cur = line[pos++] - 63;
                if (cur < 0 || cur > 63) throw GraphError(ErrorCode::BadInput, "bad graph6 byte");
                bit = 6;
            }
            --bit;
            if (cur >> bit & 1) edges.emplace_back(i, j);
        }
    if (pos != line.size())
        throw GraphError(ErrorCode::BadInput, "trailing bytes after graph6 data");
    return CubicGraph::build(n, std::move(edges));
}

std::vector<CubicGraph> read_graph_file(std::istream& in) {
    std::vector<CubicGraph> out;
    std::string first;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::istringstream all(buffer.str());
    std::string line;
    if (!std::getline(all, line)) return out;

    // edge-list files start with "n m"
    std::istringstream probe(line);
    int a, b;
    char extra;
    if (probe >> a >> b && !(probe >> extra) && line.find_first_not_of("0123456789 \t\r") == std::string::npos) {
        std::istringstream whole(buffer.str());
        out.push_back(read_edge_list(whole));
        return out;
    }

    std::istringstream rest(buffer.str());
    while (std::getline(rest, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

std::vector<CubicGraph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(ErrorCode::BadInput, "cannot open " + path);
    return read_graph_file(in);
}

}  // namespace c4c
