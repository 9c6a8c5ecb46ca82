#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oddchrom/coloring.hpp"
#include "oddchrom/generators.hpp"

using namespace oddchrom;

namespace {

Coloring make(std::vector<int> colors) {
    Coloring c(static_cast<int>(colors.size()));
    c.color = std::move(colors);
    return c;
}

}  // namespace

TEST_CASE("odd color sets and witnesses") {
    AbstractGraph c4 = cycle_graph(4);
    Coloring proper = make({1, 2, 1, 2});
    // every vertex sees the same color twice: no odd color anywhere
    for (int v = 0; v < 4; ++v) {
        CHECK(odd_color_set(c4, proper, v).empty());
        CHECK(odd_witness(c4, proper, v) == 0);
    }
    Coloring good = make({1, 2, 3, 4});
    CHECK(odd_color_set(c4, good, 0) == std::vector<int>{2, 4});
    CHECK(odd_witness(c4, good, 0) == 2);
    // uncolored neighbors are simply absent from the multiset
    Coloring partial = make({1, 2, 3, 0});
    CHECK(odd_color_set(c4, partial, 0) == std::vector<int>{2});
}

TEST_CASE("verifier accepts and rejects") {
    AbstractGraph c4 = cycle_graph(4);
    CHECK(verify_odd_coloring(c4, make({1, 2, 3, 4}), 4));
    CHECK_FALSE(verify_odd_coloring(c4, make({1, 2, 3, 4}), 3));  // palette exceeded
    CHECK_FALSE(verify_odd_coloring(c4, make({1, 2, 1, 2}), 8));  // proper but never odd
    CHECK_FALSE(verify_odd_coloring(c4, make({1, 1, 2, 3}), 8));  // improper
    CHECK_FALSE(verify_odd_coloring(c4, make({1, 2, 1, 0}), 8));  // uncolored

    std::vector<ColoringViolation> v;
    CHECK_FALSE(verify_odd_coloring(c4, make({1, 2, 1, 2}), 8, &v));
    CHECK(v.size() == 4);
    for (const auto& viol : v) CHECK(viol.kind == ColoringViolation::NoOddColor);

    v.clear();
    CHECK_FALSE(verify_odd_coloring(c4, make({1, 1, 2, 9}), 8, &v));
    bool improper = false, outOfRange = false;
    for (const auto& viol : v) {
        improper |= viol.kind == ColoringViolation::Improper;
        outOfRange |= viol.kind == ColoringViolation::ColorOutOfRange;
    }
    CHECK(improper);
    CHECK(outOfRange);
}

TEST_CASE("isolated vertices need no odd color") {
    AbstractGraph g{{{1}, {0}, {}}};
    CHECK(verify_odd_coloring(g, make({1, 2, 1}), 8));
}

TEST_CASE("verifier agrees between graph flavors") {
    EmbeddedGraph g = k7_torus();
    Coloring rainbow = make({1, 2, 3, 4, 5, 6, 7});
    CHECK(verify_odd_coloring(g.abstract(), rainbow, 7));
    CHECK(verify_odd_coloring(g, rainbow, 7));
}

TEST_CASE("coloring file parsing") {
    Coloring c = parse_coloring("# comment\n0 3\n2 1\n", 3);
    CHECK(c.color == std::vector<int>{3, 0, 1});
    CHECK_FALSE(c.complete());
    CHECK(parse_coloring("0 1\n1 2\n", 2).complete());
    CHECK_THROWS_AS(parse_coloring("0 1\n0 2\n", 2), Error);   // duplicate vertex
    CHECK_THROWS_AS(parse_coloring("5 1\n", 2), Error);        // unknown vertex
    CHECK_THROWS_AS(parse_coloring("0 0\n", 2), Error);        // colors are 1-based
    CHECK_THROWS_AS(parse_coloring("0 1 7\n", 2), Error);      // trailing token
    CHECK_THROWS_AS(parse_coloring("zero 1\n", 2), Error);

    Coloring full = make({4, 1, 2});
    Coloring back = parse_coloring(serialize_coloring(full), 3);
    CHECK(back.color == full.color);
}

TEST_CASE("recoloring the low 2-neighbor restores a witness") {
    // center 0 of degree 4; vertices 1 and 4 are 2-vertices on a path 1-4
    EmbeddedGraph g{{{1, 2, 3, 4}, {0, 4}, {0}, {0}, {0, 1}}};
    Coloring c = make({1, 2, 2, 3, 3});
    // 0 sees {2,2,3,3}: no odd color, and 0 is convenient thanks to 1 and 4
    CHECK(odd_witness(g.abstract(), c, 0) == 0);
    int moved = recolor_two_neighbor(g, c, 0);
    CHECK(moved == 1);  // ties break toward the lowest id
    CHECK(odd_witness(g.abstract(), c, 0) != 0);
    CHECK(verify_odd_coloring(g.abstract(), c, 8));

    // a second call is a no-op: the witness already exists
    Coloring before = c;
    CHECK(recolor_two_neighbor(g, c, 0) == -1);
    CHECK(c.color == before.color);
}

TEST_CASE("recoloring refuses inconvenient vertices") {
    EmbeddedGraph path{{{1}, {0, 2}, {1, 3}, {2}}};
    Coloring c = make({1, 2, 1, 2});
    CHECK_THROWS_AS(recolor_two_neighbor(path, c, 1), Error);  // degree 2
    EmbeddedGraph g = k7_torus();
    Coloring rainbow = make({1, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS_AS(recolor_two_neighbor(g, rainbow, 0), Error);  // even, no 2-neighbor
}

TEST_CASE("recoloring never breaks an otherwise valid coloring") {
    // subdivide one K7 edge; the fresh 2-vertex makes endpoints convenient
    EmbeddedGraph g = subdivide_edge(k7_torus(), 0, 1);
    AbstractGraph a = g.abstract();
    Coloring c = make({1, 2, 3, 4, 5, 6, 7, 3});
    REQUIRE(verify_odd_coloring(a, c, 8));
    for (int v : {0, 1}) {
        Coloring work = c;
        recolor_two_neighbor(g, work, v);
        CHECK(verify_odd_coloring(a, work, 8));
    }
}
