#pragma once

#include <string>
#include <vector>

#include "oddchrom/graph.hpp"

namespace oddchrom {

// Vertex coloring with 1-based colors; 0 marks an uncolored vertex.
struct Coloring {
    std::vector<int> color;

    explicit Coloring(int n = 0) : color(n, 0) {}
    int n() const { return static_cast<int>(color.size()); }
    bool complete() const;
};

// Colors of odd multiplicity among the *colored* neighbors of v, ascending.
std::vector<int> odd_color_set(const AbstractGraph& g, const Coloring& c, int v);

// The witness c_o(v): smallest color of odd multiplicity among the colored
// neighbors of v; 0 when there is none.
int odd_witness(const AbstractGraph& g, const Coloring& c, int v);

struct ColoringViolation {
    enum Kind { Improper, NoOddColor, Uncolored, ColorOutOfRange } kind;
    int u = -1, v = -1;  // Improper: the edge; otherwise u is the vertex
};

// A valid odd coloring: every vertex colored in [1, k], adjacent vertices
// differ, and every non-isolated vertex has at least one color of odd
// multiplicity in its neighborhood.
bool verify_odd_coloring(const AbstractGraph& g, const Coloring& c, int k,
                         std::vector<ColoringViolation>* violations = nullptr);
bool verify_odd_coloring(const EmbeddedGraph& g, const Coloring& c, int k,
                         std::vector<ColoringViolation>* violations = nullptr);

// Re-establishes an odd color at a convenient vertex v by recoloring its
// lowest 2-neighbor, leaving every other vertex's properness and witness
// intact. No-op when v already has a witness (always the case for odd
// degree). Throws NotConvenient, or PaletteExhausted if no color in [1, k]
// avoids the constraint set. Returns the recolored 2-neighbor, or -1.
int recolor_two_neighbor(const EmbeddedGraph& g, Coloring& c, int v, int k = 8);

// One "<vertex> <color>" line per vertex (0-based vertex, 1-based color).
Coloring parse_coloring(std::istream& in, int n);
Coloring parse_coloring(const std::string& text, int n);
std::string serialize_coloring(const Coloring& c);

}  // namespace oddchrom
