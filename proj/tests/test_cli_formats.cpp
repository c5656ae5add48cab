#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "c4c/canon.hpp"
#include "c4c/families.hpp"
#include "c4c/generate.hpp"
#include "c4c/graph6.hpp"
#include "oracles.hpp"

using namespace c4c;

TEST_CASE("graph6 round trip preserves the graph exactly") {
    std::mt19937 rng(41);
    std::vector<CubicGraph> pool{wheel3(), ladder(4), moebius(4), petersen(), ladder(10)};
    for (int i = 0; i < 40; ++i) pool.push_back(oracle::random_cubic(6 + 2 * (i % 8), rng));
    for (const CubicGraph& g : pool) {
        CubicGraph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 re-emission is byte identical") {
    for (const CubicGraph& g : {ladder(4), moebius(5), petersen(), ladder(12)}) {
        std::string s = to_graph6(g);
        CHECK(to_graph6(from_graph6(s)) == s);
    }
}

TEST_CASE("known graph6 encodings") {
    // K4 in standard graph6: n=4 gives 'C', adjacency bits 111111 -> '~'
    CHECK(to_graph6(wheel3()) == "C~");
    CHECK(from_graph6("C~") == wheel3());
    // the optional format header is accepted
    CHECK(from_graph6(">>graph6<<C~") == wheel3());
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(static_cast<void>(from_graph6("")), GraphError);
    CHECK_THROWS_AS(static_cast<void>(from_graph6("C")), GraphError);       // truncated
    CHECK_THROWS_AS(static_cast<void>(from_graph6("C~~~~")), GraphError);   // trailing bytes
    CHECK_THROWS_AS(static_cast<void>(from_graph6("B~")), GraphError);      // n=3 is odd
    CHECK_THROWS_AS(static_cast<void>(from_graph6("C\x01")), GraphError);   // byte below 63
}

TEST_CASE("edge list round trip") {
    for (const CubicGraph& g : {ladder(4), petersen(), moebius(6)}) {
        std::stringstream ss;
        write_edge_list(ss, g);
        CHECK(read_edge_list(ss) == g);
    }
}

TEST_CASE("edge list validation errors") {
    auto parse = [](const std::string& text) {
        std::stringstream ss(text);
        return read_edge_list(ss);
    };
    CHECK_THROWS_AS(static_cast<void>(parse("")), GraphError);
    CHECK_THROWS_AS(static_cast<void>(parse("4 3\n0 1\n1 2\n2 3\n")), GraphError);  // not cubic
    CHECK_THROWS_AS(static_cast<void>(parse("4 6\n0 1\n0 1\n0 2\n1 3\n2 3\n2 3\n")),
                    GraphError);  // repeated edge
    CHECK_THROWS_AS(static_cast<void>(parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 5\n")),
                    GraphError);  // id out of range
}

TEST_CASE("read_graph_file detects both formats") {
    std::stringstream g6;
    g6 << to_graph6(ladder(4)) << "\n" << to_graph6(petersen()) << "\n";
    auto from_g6 = read_graph_file(g6);
    REQUIRE(from_g6.size() == 2);
    CHECK(from_g6[0] == ladder(4));
    CHECK(from_g6[1] == petersen());

    std::stringstream el;
    write_edge_list(el, moebius(4));
    auto from_el = read_graph_file(el);
    REQUIRE(from_el.size() == 1);
    CHECK(from_el[0] == moebius(4));
}

TEST_CASE("graph6 encoding is label-sensitive but certificate is not") {
    std::mt19937 rng(17);
    CubicGraph p = petersen();
    CubicGraph q = oracle::relabel_random(p, rng);
    while (q == p) q = oracle::relabel_random(p, rng);
    CHECK(to_graph6(p) != to_graph6(q));
    CHECK(certificate(p) == certificate(q));
}
