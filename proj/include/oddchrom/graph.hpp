#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oddchrom/errors.hpp"

namespace oddchrom {

// Adjacency-list graph with no geometric structure. Neighbor lists are kept
// sorted; vertices are 0-based.
struct AbstractGraph {
    std::vector<std::vector<int>> adj;

    int n() const { return static_cast<int>(adj.size()); }
    int m() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    // Edges as (u, v) pairs with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;
};

// Rotation system: rot[v] lists the neighbors of v in cyclic order around v.
// The cyclic order is the embedding; everything facial derives from it.
struct EmbeddedGraph {
    std::vector<std::vector<int>> rot;

    int n() const { return static_cast<int>(rot.size()); }
    int m() const;
    int degree(int v) const { return static_cast<int>(rot[v].size()); }
    bool has_edge(int u, int v) const;
    // Position of u in rot[v]; -1 when absent.
    int rot_index(int v, int u) const;
    // Neighbor following u in the cyclic order around v.
    int rot_succ(int v, int u) const;
    AbstractGraph abstract() const;
    std::vector<std::pair<int, int>> edges() const;
};

// Throws SelfLoop / DuplicateNeighbor / AsymmetricAdjacency / OutOfRange.
void validate(const AbstractGraph& g);
void validate(const EmbeddedGraph& g);

// Faces of an embedded graph. walk[f] is the closed boundary walk of face f:
// the directed edges (walk[i] -> walk[i+1]), indices mod the walk length.
// Every directed edge lies on exactly one face.
struct FaceSet {
    std::vector<std::vector<int>> walk;
    std::map<std::pair<int, int>, int> face_of;  // directed edge -> face index

    int count() const { return static_cast<int>(walk.size()); }
    int deg(int f) const { return static_cast<int>(walk[f].size()); }
    int at(int u, int v) const;  // face of directed edge u->v; throws NonEdge
};

// Traces all faces: next edge after (u -> v) is (v -> rot_succ(v, u)). Walks
// start from the lexicographically smallest unused directed edge, so the
// face order and walk phases are deterministic. Works per component.
FaceSet trace_faces(const EmbeddedGraph& g);

bool is_connected(const AbstractGraph& g);
bool is_connected(const EmbeddedGraph& g);

// Euler genus (2 - n + m - f) / 2 of the 2-cell embedding given by the
// rotation system. Throws Disconnected: the formula is only meaningful on
// connected graphs. 0 = sphere, 1 = torus.
int euler_genus(const EmbeddedGraph& g);
int euler_genus(const EmbeddedGraph& g, const FaceSet& faces);

// True when some edge lies in two distinct triangles (triangles sharing an
// edge). Purely adjacency-based, no embedding involved.
bool has_adjacent_triangles(const AbstractGraph& g);

// ---- vertex / face classification ----

int two_neighbor_count(const EmbeddedGraph& g, int v);
// Convenient: degree >= 4 and (odd degree, or at least one 2-neighbor).
bool is_convenient(const EmbeddedGraph& g, int v);
// Distinct 2-vertices on the boundary walk of f.
int face_two_vertex_count(const EmbeddedGraph& g, const FaceSet& faces, int f);
// 4-face whose walk holds exactly one distinct 2-vertex.
bool is_four_one_face(const EmbeddedGraph& g, const FaceSet& faces, int f);

// Special 6-vertex pattern: v is a non-convenient 6-vertex whose six incident
// faces, read between consecutive neighbors in some rotation/reflection of
// rot[v], match (3-face, anything, 3-face, 4_1, 4_1, 4_1). On a match,
// neighbors[0..5] holds v_1..v_6 of that alignment.
struct SpecialAlignment {
    std::vector<int> neighbors;
};
// All matching alignments (up to 12), in a deterministic order.
std::vector<SpecialAlignment> special_alignments(const EmbeddedGraph& g,
                                                 const FaceSet& faces, int v);
bool is_special_six(const EmbeddedGraph& g, const FaceSet& faces, int v);

// ---- surgery ----

// Replaces edge (u, v) by the path u - w - v where w = n is fresh. The two
// faces at (u, v) each grow by one; genus is unchanged.
EmbeddedGraph subdivide_edge(const EmbeddedGraph& g, int u, int v);

// Deletes a set of vertices, compacting ids. old_to_new[v] == -1 for deleted
// vertices; new_to_old has one entry per surviving vertex. Rotation order of
// the survivors is preserved.
EmbeddedGraph delete_vertices(const EmbeddedGraph& g, const std::vector<int>& del,
                              std::vector<int>* old_to_new = nullptr,
                              std::vector<int>* new_to_old = nullptr);

// ---- serialization ----
// Rotation format:   "V <n>" then one "R <v>: <u1> ... <ud>" line per vertex.
// DIMACS-like:       "p edge <n> <m>" then "e <u> <v>" lines, 1-based.
// '#' and 'c' start comments. parse_graph() auto-detects by first token.

EmbeddedGraph parse_rotation_system(std::istream& in);
EmbeddedGraph parse_rotation_system(const std::string& text);
std::string serialize_rotation_system(const EmbeddedGraph& g);

AbstractGraph parse_dimacs(std::istream& in);
AbstractGraph parse_dimacs(const std::string& text);
std::string serialize_dimacs(const AbstractGraph& g);

// Auto-detect: rotation text yields the embedding; DIMACS yields sorted
// rotations (an arbitrary but valid embedding).
EmbeddedGraph parse_graph(const std::string& text);

}  // namespace oddchrom
