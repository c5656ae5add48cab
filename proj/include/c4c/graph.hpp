#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace c4c {

// Error codes shared across the library.
enum class ErrorCode {
    NotCubic,
    NotSimple,
    Disconnected,
    OddOrder,
    EdgeNotPresent,
    IdenticalEdges,
    SimplicityViolation,
    PreconditionViolated,
    SeedNotC5C,
    BadInput,
};

class GraphError : public std::runtime_error {
public:
    GraphError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw GraphError(ErrorCode::NotSimple, "loop edge");
    }

    bool contains(int w) const { return u == w || v == w; }
    int other(int w) const { return u == w ? v : u; }
    bool shares_endpoint(const Edge& e) const {
        return contains(e.u) || contains(e.v);
    }

    auto operator<=>(const Edge&) const = default;
};

// Immutable simple connected 3-regular graph. Vertex ids are dense 0..n-1.
// Adjacency is kept both as sorted neighbor triples and as per-vertex
// bitmasks, so has_edge is O(1) for n <= 64.
class CubicGraph {
public:
    static CubicGraph build(int n, std::vector<Edge> edge_list);

    int order() const { return n_; }
    int size() const { return 3 * n_ / 2; }

    const std::array<int, 3>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const {
        return u != v && (bits_[u] >> v & 1u) != 0;
    }
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    // All 3n/2 edges in lexicographic order.
    std::vector<Edge> edges() const;

    // Third neighbor of v, excluding a and b (which must be neighbors).
    int third_neighbor(int v, int a, int b) const;

    bool operator==(const CubicGraph&) const = default;

private:
    CubicGraph() = default;
    int n_ = 0;
    std::vector<std::array<int, 3>> adj_;
    std::vector<std::uint64_t> bits_;
};

// Scratch graph for intermediates that need not be cubic (deletion and
// contraction results, blocks, oracle search spaces).
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int order) : n(order), adj(order) {}
    explicit SimpleGraph(const CubicGraph& g);

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool connected() const;
    std::vector<std::vector<int>> components() const;
};

// Parses/serializes the edge-list text format: first line "n m",
// then m lines "u v" with 0-based ids.
CubicGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const CubicGraph& g);

}  // namespace c4c
