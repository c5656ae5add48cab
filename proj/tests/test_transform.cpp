#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "c4c/canon.hpp"
#include "c4c/families.hpp"
#include "c4c/spread.hpp"
#include "c4c/structure.hpp"
#include "c4c/transform.hpp"

using namespace c4c;

TEST_CASE("bridge adds two vertices and three edges") {
    CubicGraph g = ladder(4);
    auto es = g.edges();
    CubicGraph b = bridge(g, es[0], es[5]);
    CHECK(b.order() == g.order() + 2);
    CHECK(b.size() == g.size() + 3);
    // x = n subdivides e1, y = n+1 subdivides e2
    CHECK(b.has_edge(es[0].u, 8));
    CHECK(b.has_edge(es[0].v, 8));
    CHECK(b.has_edge(es[5].u, 9));
    CHECK(b.has_edge(es[5].v, 9));
    CHECK(b.has_edge(8, 9));
}

TEST_CASE("bridge argument errors") {
    CubicGraph g = ladder(4);
    CHECK_THROWS_AS(static_cast<void>(bridge(g, Edge(0, 2), Edge(0, 1))), GraphError);
    CHECK_THROWS_AS(static_cast<void>(bridge(g, Edge(0, 1), Edge(0, 1))), GraphError);
}

TEST_CASE("bridging W3 over all distinct pairs gives K3,3 and the prism") {
    CubicGraph w = wheel3();
    std::vector<CubicGraph> results;
    auto es = w.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) results.push_back(bridge(w, es[i], es[j]));
    auto classes = dedup(results);
    REQUIRE(classes.size() == 2);
    CHECK(classes.count(certificate(moebius(3))) == 1);  // K3,3
    CHECK(classes.count(certificate(ladder(3))) == 1);   // prism
}

TEST_CASE("bridging non-adjacent K3,3 pairs gives only V8") {
    CubicGraph g = moebius(3);
    std::vector<CubicGraph> results;
    auto es = g.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            if (!es[i].shares_endpoint(es[j])) results.push_back(bridge(g, es[i], es[j]));
    auto classes = dedup(results);
    REQUIRE(classes.size() == 1);
    CHECK(classes.count(certificate(moebius(4))) == 1);
}

TEST_CASE("bridging a (1,1) pair of Q8 gives Q10") {
    CubicGraph cube = ladder(4);
    auto es = cube.edges();
    int checked = 0;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto s = cycle_spread(cube, es[i], es[j]);
            if (s && *s == CycleSpread{1, 1}) {
                CHECK(are_isomorphic(bridge(cube, es[i], es[j]), ladder(5)));
                ++checked;
            }
        }
    CHECK(checked > 0);
}

TEST_CASE("unbridge inverts bridge exactly") {
    for (const CubicGraph& g : {ladder(4), moebius(4), petersen(), ladder(5)}) {
        auto es = g.edges();
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                CubicGraph b = bridge(g, es[i], es[j]);
                auto r = unbridge(b, Edge(g.order(), g.order() + 1));
                CHECK(r.graph == g);
            }
    }
}

TEST_CASE("unbridging any rung of ladder(5) gives ladder(4)") {
    CubicGraph q10 = ladder(5);
    Certificate cube = certificate(ladder(4));
    for (int i = 0; i < 5; ++i) {
        auto r = unbridge(q10, Edge(i, 5 + i));
        CHECK(certificate(r.graph) == cube);
    }
}

TEST_CASE("unbridge refuses triangles") {
    CubicGraph w = wheel3();
    for (const Edge& e : w.edges()) {
        try {
            static_cast<void>(unbridge(w, e));
            FAIL("expected SimplicityViolation");
        } catch (const GraphError& err) {
            CHECK(err.code() == ErrorCode::SimplicityViolation);
        }
    }
}

TEST_CASE("unbridge records a dense relabeling map") {
    CubicGraph g = ladder(5);
    auto r = unbridge(g, Edge(0, 5));
    int removed = 0;
    std::vector<char> hit(g.order() - 2, 0);
    for (int v = 0; v < g.order(); ++v) {
        if (r.relabel[v] < 0)
            ++removed;
        else
            hit[r.relabel[v]] = 1;
    }
    CHECK(removed == 2);
    CHECK(std::count(hit.begin(), hit.end(), 1) == g.order() - 2);
}

TEST_CASE("delete_edge leaves two degree-2 vertices") {
    CubicGraph g = petersen();
    SimpleGraph h = delete_edge(g, Edge(0, 1));
    CHECK(h.degree(0) == 2);
    CHECK(h.degree(1) == 2);
    CHECK(h.edge_count() == g.size() - 1);
}

TEST_CASE("contract_edge merges into a degree-4 vertex") {
    CubicGraph cube = ladder(4);
    SimpleGraph h = contract_edge(cube, Edge(0, 1));
    CHECK(h.n == 7);
    CHECK(h.degree(0) == 4);
    CHECK(h.edge_count() == cube.size() - 1);
}

TEST_CASE("contract_edge refuses triangle edges") {
    CubicGraph w = wheel3();
    try {
        static_cast<void>(contract_edge(w, Edge(0, 1)));
        FAIL("expected SimplicityViolation");
    } catch (const GraphError& err) {
        CHECK(err.code() == ErrorCode::SimplicityViolation);
    }
}

TEST_CASE("unbridging preserves planarity") {
    for (const CubicGraph& g : {ladder(4), ladder(5), ladder(6)}) {
        auto es = g.edges();
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                CubicGraph b = bridge(g, es[i], es[j]);
                auto r = unbridge(b, Edge(g.order(), g.order() + 1));
                CHECK(is_planar(r.graph));
            }
    }
}
