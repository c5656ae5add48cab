#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "c4c/canon.hpp"
#include "c4c/families.hpp"
#include "c4c/generate.hpp"
#include "c4c/spread.hpp"
#include "c4c/transform.hpp"
#include "c4c/structure.hpp"
#include "oracles.hpp"

using namespace c4c;

TEST_CASE("cycle spread worked examples on the cube") {
    CubicGraph cube = ladder(4);
    CHECK(*cycle_spread(cube, Edge(0, 1), Edge(0, 1)) == CycleSpread{0, 0});
    // opposite edges of the face 0-1-5-4
    CHECK(*cycle_spread(cube, Edge(0, 1), Edge(4, 5)) == CycleSpread{1, 1});
    // rungs on opposite sides
    CHECK(*cycle_spread(cube, Edge(0, 4), Edge(2, 6)) == CycleSpread{2, 2});
    // adjacent edges
    CHECK(*cycle_spread(cube, Edge(0, 1), Edge(1, 2)) == CycleSpread{0, 2});
}

TEST_CASE("cycle spread errors") {
    CubicGraph cube = ladder(4);
    CHECK_THROWS_AS(static_cast<void>(cycle_spread(cube, Edge(0, 2), Edge(0, 1))), GraphError);
}

TEST_CASE("threshold predicates on the cube") {
    CubicGraph cube = ladder(4);
    CHECK(!meets_threshold(cube, Edge(0, 1), Edge(1, 2), SpreadThreshold::AtLeast11));
    CHECK(meets_threshold(cube, Edge(0, 1), Edge(1, 2), SpreadThreshold::Distinct));
    CHECK(meets_threshold(cube, Edge(0, 1), Edge(4, 5), SpreadThreshold::AtLeast11));
    CHECK(!meets_threshold(cube, Edge(0, 1), Edge(4, 5), SpreadThreshold::AtLeast12));
    CHECK(meets_threshold(cube, Edge(0, 4), Edge(2, 6), SpreadThreshold::AtLeast22));
    CHECK(!meets_threshold(cube, Edge(0, 1), Edge(0, 1), SpreadThreshold::Distinct));
}

TEST_CASE("cube vertex-pair procedure counts") {
    CubicGraph cube = ladder(4);
    // b=0 and c=5 are non-adjacent with two common neighbors (1 and 4)
    auto a11 = candidate_configs(cube, 0, 5, SpreadThreshold::AtLeast11);
    CHECK(a11.size() == 7);
    auto a12 = candidate_configs(cube, 0, 5, SpreadThreshold::AtLeast12);
    REQUIRE(a12.size() == 3);
    for (const auto& c : a12) CHECK(c.d == 6);  // the one neighbor of c avoiding N(b)
}

TEST_CASE("petersen vertex-pair procedure counts at (2,2)") {
    // Any two non-adjacent vertices of the Petersen graph have exactly one
    // common neighbor, leaving two choices of d with one choice of a each;
    // an automorphism fixing b and c swaps the two configurations.
    CubicGraph p = petersen();
    for (int b = 0; b < 10; ++b)
        for (int c = 0; c < 10; ++c) {
            if (b == c || p.has_edge(b, c)) continue;
            auto configs = candidate_configs(p, b, c, SpreadThreshold::AtLeast22);
            REQUIRE(configs.size() == 2);
            CHECK(are_isomorphic(bridge(p, configs[0].edge_ab(), configs[0].edge_cd()),
                                 bridge(p, configs[1].edge_ab(), configs[1].edge_cd())));
        }
}

TEST_CASE("candidate monotonicity") {
    for (const CubicGraph& g : {ladder(4), ladder(5), moebius(4), petersen()}) {
        auto p11 = candidate_pairs(g, SpreadThreshold::AtLeast11);
        auto p12 = candidate_pairs(g, SpreadThreshold::AtLeast12);
        auto p22 = candidate_pairs(g, SpreadThreshold::AtLeast22);
        for (const auto& pr : p22) CHECK(p12.count(pr) == 1);
        for (const auto& pr : p12) CHECK(p11.count(pr) == 1);
    }
}

TEST_CASE("candidate completeness against the predicate") {
    for (const CubicGraph& g : {ladder(4), moebius(4), petersen(), ladder(5)}) {
        for (auto t : {SpreadThreshold::AtLeast11, SpreadThreshold::AtLeast12,
                       SpreadThreshold::AtLeast22}) {
            std::set<EdgePair> want;
            auto es = g.edges();
            for (size_t i = 0; i < es.size(); ++i)
                for (size_t j = i + 1; j < es.size(); ++j)
                    if (meets_threshold(g, es[i], es[j], t))
                        want.insert(make_edge_pair(es[i], es[j]));
            CHECK(candidate_pairs(g, t) == want);
        }
    }
}

TEST_CASE("spread oracle agreement over the n <= 12 census") {
    Census census = pipeline_wormald(12);
    for (const auto& [n, level] : census.per_n)
        for (const auto& entry : level) {
            const CubicGraph& g = entry.graph;
            auto es = g.edges();
            for (size_t i = 0; i < es.size(); ++i)
                for (size_t j = i; j < es.size(); ++j) {
                    auto got = cycle_spread(g, es[i], es[j]);
                    auto want = oracle::spread_oracle(g, es[i], es[j]);
                    REQUIRE(got.has_value() == want.has_value());
                    if (got) CHECK(*got == *want);
                }
        }
}

TEST_CASE("predicates match true spread on 2-connected triangle-free graphs") {
    std::vector<CubicGraph> pool{ladder(4), ladder(5), ladder(6),
                                 moebius(4), moebius(5), petersen()};
    for (const CubicGraph& g : pool) {
        auto es = g.edges();
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                auto s = *cycle_spread(g, es[i], es[j]);
                CHECK(meets_threshold(g, es[i], es[j], SpreadThreshold::AtLeast11) ==
                      (s >= CycleSpread{1, 1}));
                CHECK(meets_threshold(g, es[i], es[j], SpreadThreshold::AtLeast12) ==
                      (s >= CycleSpread{1, 2}));
                // (2,2) selection is sufficient, not necessary
                if (meets_threshold(g, es[i], es[j], SpreadThreshold::AtLeast22))
                    CHECK(s >= CycleSpread{2, 2});
            }
    }
}
