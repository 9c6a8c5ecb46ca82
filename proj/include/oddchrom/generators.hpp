#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddchrom/graph.hpp"
#include "oddchrom/reduction.hpp"

namespace oddchrom {

// Deterministic instance generators. Everything seeded is reproducible: the
// same spec yields the same graph, byte for byte, on any platform.

struct GenSpec {
    std::string kind;  // k7-torus | torus-grid | cycle | complete |
                       // random-toroidal | plant
    std::vector<long long> params;  // torus-grid: m n; cycle/complete/random-toroidal: n
    std::string tag;                // plant only: configuration name
    std::uint64_t seed = 0;
};

struct GenResult {
    bool embedded = true;
    EmbeddedGraph eg;
    AbstractGraph ag;

    std::string text() const;  // rotation-system or edge-list serialization
};

// The complete graph on 7 vertices embedded on the torus: rotation of vertex
// i is i+1, i+3, i+2, i+6, i+4, i+5 (mod 7). Genus 1, 14 triangular faces.
EmbeddedGraph k7_torus();

// m-by-n grid on the torus, rotations [right, down, left, up]; m, n >= 3.
// Genus 1, m*n quadrilateral faces.
EmbeddedGraph torus_grid(int m, int n);

AbstractGraph cycle_graph(int n);     // n >= 3
AbstractGraph complete_graph(int n);  // n >= 1

// Connected rotation-system graph on n vertices (9 <= n <= 24) with euler
// genus <= 1 and no adjacent triangles: a torus grid with seeded non-bridge
// edge deletions and edge subdivisions, then a seeded relabeling.
EmbeddedGraph random_toroidal(int n, std::uint64_t seed);

// A graph on <= 20 vertices whose highest-priority configuration is exactly
// the requested tag, picked from a small per-tag catalog and relabeled by the
// seed. Throws a plant-infeasible error when validation keeps failing.
EmbeddedGraph plant(ConfigTag tag, std::uint64_t seed);

GenResult generate(const GenSpec& spec);

}  // namespace oddchrom
