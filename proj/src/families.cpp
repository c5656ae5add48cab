#include "c4c/families.hpp"

namespace c4c {

CubicGraph ladder(int k) {
    if (k < 3) throw GraphError(ErrorCode::BadInput, "ladder needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);              // outer cycle
        edges.emplace_back(k + i, k + (i + 1) % k);      // inner cycle
        edges.emplace_back(i, k + i);                    // rung
    }
    return CubicGraph::build(2 * k, std::move(edges));
}

CubicGraph moebius(int k) {
    if (k < 3) throw GraphError(ErrorCode::BadInput, "moebius needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < 2 * k; ++i) edges.emplace_back(i, (i + 1) % (2 * k));
    for (int i = 0; i < k; ++i) edges.emplace_back(i, i + k);
    return CubicGraph::build(2 * k, std::move(edges));
}

CubicGraph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return CubicGraph::build(10, std::move(edges));
}

CubicGraph wheel3() {
    std::vector<Edge> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
    return CubicGraph::build(4, std::move(edges));
}

}  // namespace c4c
