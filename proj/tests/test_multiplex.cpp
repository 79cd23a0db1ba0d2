#include <sstream>

#include "doctest.h"
#include "lart/multiplex.hpp"
#include "oracles.hpp"

using lart::Multiplex;

TEST_SUITE_BEGIN("multiplex");

TEST_CASE("interlayer weight counts common neighbors") {
    Multiplex m(5, 2);
    // layer 0: node 0 has neighbors {1,2,3}; layer 1: {2,3,4}
    for (int v : {1, 2, 3}) m.add_edge(0, 0, v);
    for (int v : {2, 3, 4}) m.add_edge(1, 0, v);
    CHECK(lart::interlayer_weight(m, 0, 0, 1) == 2);
    CHECK(lart::interlayer_weight(m, 0, 1, 0) == 2);
}

TEST_CASE("isolated node gives zero weight") {
    Multiplex m(4, 2);
    m.add_edge(1, 0, 1);
    m.add_edge(1, 0, 2);
    CHECK(lart::interlayer_weight(m, 0, 0, 1) == 0);
}

TEST_CASE("identical neighbor sets give full weight") {
    Multiplex m(5, 3);
    for (int k = 0; k < 3; ++k)
        for (int v : {1, 2, 3, 4}) m.add_edge(k, 0, v);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            if (k != l) CHECK(lart::interlayer_weight(m, 0, k, l) == 4);
}

TEST_CASE("interlayer weight bounded by min degree, symmetric") {
    std::mt19937_64 rng(7);
    const auto m = oracle::random_multiplex(rng, 12, 3, 0.3);
    for (int i = 0; i < 12; ++i)
        for (int k = 0; k < 3; ++k)
            for (int l = k + 1; l < 3; ++l) {
                const int w = lart::interlayer_weight(m, i, k, l);
                CHECK(w == lart::interlayer_weight(m, i, l, k));
                CHECK(w >= 0);
                CHECK(w <= std::min(m.degree(i, k), m.degree(i, l)));
            }
}

TEST_CASE("out-of-range arguments rejected") {
    Multiplex m(3, 2);
    CHECK_THROWS_AS(lart::interlayer_weight(m, 3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(lart::interlayer_weight(m, 0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(lart::interlayer_weight(m, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(m.add_edge(0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(m.add_edge(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(m.add_edge(0, 1, 1), std::invalid_argument);
}

TEST_CASE("single edge file parses") {
    std::istringstream in("layers=2 nodes=3\n0 0 1\n");
    const auto m = lart::read_multiplex_stream(in);
    CHECK(m.num_layers() == 2);
    CHECK(m.num_nodes() == 3);
    CHECK(m.num_edges() == 1);
    CHECK(m.has_edge(0, 0, 1));
    CHECK(m.has_edge(0, 1, 0));
}

TEST_CASE("comments and reversed edge order accepted") {
    std::istringstream in("# a comment\nlayers=1 nodes=4\n0 2 1\n# another\n0 3 0\n");
    const auto m = lart::read_multiplex_stream(in);
    CHECK(m.has_edge(0, 1, 2));
    CHECK(m.has_edge(0, 0, 3));
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("self-loop") {
        std::istringstream in("layers=2 nodes=3\n0 1 1\n");
        CHECK_THROWS_WITH_AS(lart::read_multiplex_stream(in),
                             doctest::Contains("line 2"), lart::ParseError);
    }
    SUBCASE("duplicate edge") {
        std::istringstream in("layers=1 nodes=3\n0 0 1\n0 1 0\n");
        CHECK_THROWS_WITH_AS(lart::read_multiplex_stream(in),
                             doctest::Contains("line 3"), lart::ParseError);
    }
    SUBCASE("index out of range") {
        std::istringstream in("layers=1 nodes=3\n0 0 3\n");
        CHECK_THROWS_AS(lart::read_multiplex_stream(in), lart::ParseError);
    }
    SUBCASE("malformed line") {
        std::istringstream in("layers=1 nodes=3\n0 0\n");
        CHECK_THROWS_AS(lart::read_multiplex_stream(in), lart::ParseError);
    }
    SUBCASE("bad header") {
        std::istringstream in("nodes=3 layers=1\n");
        CHECK_THROWS_AS(lart::read_multiplex_stream(in), lart::ParseError);
    }
}

TEST_CASE("write/read round-trip on random multiplexes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = oracle::random_multiplex(rng, 15, 1 + trial % 4, 0.25);
        std::ostringstream out;
        lart::write_multiplex_stream(m, out);
        std::istringstream in(out.str());
        CHECK(lart::read_multiplex_stream(in) == m);
    }
}

TEST_SUITE_END();
