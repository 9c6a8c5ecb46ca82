#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oddchrom/generators.hpp"
#include "oddchrom/solver.hpp"

using namespace oddchrom;

namespace {

AbstractGraph random_graph(int n, std::mt19937_64& rng, int densityPercent) {
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < densityPercent) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
    return AbstractGraph{std::move(adj)};
}

}  // namespace

TEST_CASE("known odd chromatic numbers") {
    CHECK(brute_force_chi_odd(cycle_graph(3)).chi == 3);
    CHECK(brute_force_chi_odd(cycle_graph(4)).chi == 4);
    CHECK(brute_force_chi_odd(cycle_graph(5)).chi == 5);
    CHECK(brute_force_chi_odd(cycle_graph(6)).chi == 3);
    CHECK(brute_force_chi_odd(complete_graph(2)).chi == 2);
    CHECK(exact_chi_odd(cycle_graph(5)).chi == 5);
    CHECK(exact_chi_odd(cycle_graph(6)).chi == 3);
    CHECK(exact_chi_odd(complete_graph(7)).chi == 7);
    CHECK(exact_chi_odd(k7_torus().abstract()).chi == 7);
}

TEST_CASE("solver results carry verified witnesses") {
    SolveResult r = exact_chi_odd(cycle_graph(7));
    REQUIRE(r.chi > 0);
    CHECK(verify_odd_coloring(cycle_graph(7), r.coloring, r.chi));
    CHECK(r.nodes > 0);
}

TEST_CASE("edge cases") {
    CHECK(exact_chi_odd(AbstractGraph{{}}).chi == 0);
    CHECK(brute_force_chi_odd(AbstractGraph{{}}).chi == 0);
    CHECK(exact_chi_odd(AbstractGraph{{{}, {}}}).chi == 1);  // two isolated points
    CHECK(exact_chi_odd(complete_graph(1)).chi == 1);
    // insufficient palette is reported, not thrown
    CHECK(exact_chi_odd(complete_graph(7), 6).chi == -1);
    CHECK(brute_force_chi_odd(cycle_graph(4), 3).chi == -1);
}

TEST_CASE("brute force refuses big instances") {
    CHECK_THROWS_AS(brute_force_chi_odd(cycle_graph(11)), Error);
    CHECK_NOTHROW(brute_force_chi_odd(cycle_graph(10)));
}

TEST_CASE("exact search matches brute force on a seeded corpus") {
    std::mt19937_64 rng(20260819);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        AbstractGraph g = random_graph(n, rng, 30 + static_cast<int>(rng() % 50));
        SolveResult slow = brute_force_chi_odd(g);
        SolveResult fast = exact_chi_odd(g);
        CAPTURE(trial);
        CAPTURE(n);
        CHECK(slow.chi == fast.chi);
        if (fast.chi > 0) CHECK(verify_odd_coloring(g, fast.coloring, fast.chi));
    }
}

TEST_CASE("decision variant at fixed k") {
    auto none = solve_exact_k(complete_graph(7), 6);
    CHECK_FALSE(none.has_value());
    long long nodes = 0;
    auto some = solve_exact_k(complete_graph(7), 7, &nodes);
    REQUIRE(some.has_value());
    CHECK(verify_odd_coloring(complete_graph(7), *some, 7));
    CHECK(nodes > 0);
    auto empty = solve_exact_k(AbstractGraph{{}}, 8);
    REQUIRE(empty.has_value());
    CHECK(empty->n() == 0);
}

TEST_CASE("partial extension respects preassignments") {
    AbstractGraph c6 = cycle_graph(6);
    Coloring partial(6);
    partial.color[0] = 2;
    partial.color[3] = 3;
    auto full = extend_partial(c6, partial, 8);
    REQUIRE(full.has_value());
    CHECK(full->color[0] == 2);
    CHECK(full->color[3] == 3);
    CHECK(verify_odd_coloring(c6, *full, 8));

    Coloring bad(6);
    bad.color[0] = 1;
    bad.color[1] = 1;  // improper preassignment
    CHECK_THROWS_AS(extend_partial(c6, bad, 8), Error);

    Coloring outOfRange(6);
    outOfRange.color[0] = 9;
    CHECK_THROWS_AS(extend_partial(c6, outOfRange, 8), Error);
}

TEST_CASE("unextendable partials report failure") {
    // a colored K3 with palette 3 leaves no color for an attached apex...
    AbstractGraph g{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};  // K4
    Coloring partial(4);
    partial.color[0] = 1;
    partial.color[1] = 2;
    partial.color[2] = 3;
    CHECK_FALSE(extend_partial(g, partial, 3).has_value());
    CHECK(extend_partial(g, partial, 4).has_value());
}
