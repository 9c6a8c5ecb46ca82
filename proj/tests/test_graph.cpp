#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oddchrom/generators.hpp"
#include "oddchrom/graph.hpp"

using namespace oddchrom;

namespace {

// Planar tetrahedron: vertex 3 inside triangle 0-1-2, rotations
// counterclockwise.
EmbeddedGraph k4_planar() {
    return EmbeddedGraph{{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}}};
}

std::string gadget_path(const char* name) {
    return std::string(ODDCHROM_DATA) + "/gadgets/" + name;
}

EmbeddedGraph load_gadget(const char* name) {
    std::ifstream in(gadget_path(name));
    REQUIRE(in.good());
    return parse_rotation_system(in);
}

}  // namespace

TEST_CASE("rotation parser roundtrip") {
    EmbeddedGraph g = k4_planar();
    std::string text = serialize_rotation_system(g);
    EmbeddedGraph h = parse_rotation_system(text);
    CHECK(h.rot == g.rot);
}

TEST_CASE("rotation parser accepts comments and blank lines") {
    EmbeddedGraph g = parse_rotation_system(
        "# a 2-cycle of degree-1 vertices\n"
        "\nV 2\nR 0: 1\n# middle\nR 1: 0\n");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
}

TEST_CASE("rotation parser rejects malformed input") {
    try {
        parse_rotation_system("V 2\nR 0: 1\nR 1:\n");
        FAIL("asymmetric rotation accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AsymmetricAdjacency);
    }
    CHECK_THROWS_AS(parse_rotation_system("V 1\nR 0: 0\n"), Error);            // self-loop
    CHECK_THROWS_AS(parse_rotation_system("V 2\nR 0: 1 1\nR 1: 0 0\n"), Error);  // duplicate
    CHECK_THROWS_AS(parse_rotation_system("V x\n"), Error);
    CHECK_THROWS_AS(parse_rotation_system(""), Error);
    CHECK_THROWS_AS(parse_rotation_system("V 2\nR 0: 5\nR 1: 0\n"), Error);  // out of range
}

TEST_CASE("edge list parser") {
    AbstractGraph g = parse_dimacs("c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    CHECK(g.n() == 4);
    CHECK(g.m() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(3, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\n"), Error);  // count mismatch

    std::string text = serialize_dimacs(g);
    AbstractGraph h = parse_dimacs(text);
    CHECK(h.adj == g.adj);
}

TEST_CASE("format auto-detection") {
    EmbeddedGraph a = parse_graph("V 3\nR 0: 1 2\nR 1: 2 0\nR 2: 0 1\n");
    CHECK(a.n() == 3);
    EmbeddedGraph b = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n");
    CHECK(b.n() == 3);
    CHECK(b.m() == 3);
    CHECK_THROWS_AS(parse_graph("Q 3\n"), Error);
}

TEST_CASE("face tracing on the planar tetrahedron") {
    EmbeddedGraph g = k4_planar();
    FaceSet faces = trace_faces(g);
    CHECK(faces.count() == 4);
    for (int f = 0; f < faces.count(); ++f) CHECK(faces.deg(f) == 3);
    CHECK(euler_genus(g) == 0);

    // every arc belongs to exactly one walk
    int arcs = 0;
    for (const auto& w : faces.walk) arcs += static_cast<int>(w.size());
    CHECK(arcs == 2 * g.m());
    CHECK(faces.at(0, 1) >= 0);
    CHECK(faces.at(0, 1) != faces.at(1, 0));
}

TEST_CASE("face tracing on a plain cycle") {
    EmbeddedGraph g{{{3, 1}, {0, 2}, {1, 3}, {2, 0}}};
    FaceSet faces = trace_faces(g);
    CHECK(faces.count() == 2);
    CHECK(faces.deg(0) == 4);
    CHECK(faces.deg(1) == 4);
    CHECK(euler_genus(g) == 0);
}

TEST_CASE("K7 embeds on the torus with 14 triangles") {
    EmbeddedGraph g = k7_torus();
    CHECK(g.n() == 7);
    CHECK(g.m() == 21);
    FaceSet faces = trace_faces(g);
    CHECK(faces.count() == 14);
    for (int f = 0; f < faces.count(); ++f) CHECK(faces.deg(f) == 3);
    CHECK(euler_genus(g) == 1);
    CHECK(euler_genus(g, faces) == 1);
}

TEST_CASE("torus grid embeds with quadrilateral faces") {
    EmbeddedGraph g = torus_grid(3, 4);
    CHECK(g.n() == 12);
    CHECK(g.m() == 24);
    FaceSet faces = trace_faces(g);
    CHECK(faces.count() == 12);
    for (int f = 0; f < faces.count(); ++f) CHECK(faces.deg(f) == 4);
    CHECK(euler_genus(g) == 1);
}

TEST_CASE("euler genus edge cases") {
    CHECK(euler_genus(EmbeddedGraph{{}}) == 0);
    CHECK(euler_genus(EmbeddedGraph{{{}}}) == 0);  // a single point
    EmbeddedGraph disconnected{{{1}, {0}, {3}, {2}}};
    CHECK_THROWS_AS(euler_genus(disconnected), Error);
    CHECK(trace_faces(disconnected).count() == 2);  // tracing still works per component
}

TEST_CASE("connectivity") {
    CHECK(is_connected(EmbeddedGraph{{}}));
    CHECK(is_connected(k4_planar()));
    CHECK_FALSE(is_connected(EmbeddedGraph{{{1}, {0}, {}}}));
}

TEST_CASE("adjacent triangle detection") {
    CHECK(has_adjacent_triangles(k4_planar().abstract()));
    CHECK(has_adjacent_triangles(k7_torus().abstract()));
    // the 3x3 torus grid has row and column triangles, but no two share an edge
    CHECK_FALSE(has_adjacent_triangles(torus_grid(3, 3).abstract()));
    CHECK_FALSE(has_adjacent_triangles(torus_grid(4, 4).abstract()));
}

TEST_CASE("subdivision preserves the embedding") {
    EmbeddedGraph g = k7_torus();
    FaceSet before = trace_faces(g);
    EmbeddedGraph h = subdivide_edge(g, 0, 1);
    CHECK(h.n() == 8);
    CHECK(h.m() == 22);
    CHECK(h.degree(7) == 2);
    CHECK(h.degree(0) == 6);
    // w sits exactly where the removed neighbor was
    CHECK(h.rot[0][g.rot_index(0, 1)] == 7);
    CHECK(h.rot[1][g.rot_index(1, 0)] == 7);
    FaceSet after = trace_faces(h);
    CHECK(after.count() == before.count());
    CHECK(euler_genus(h) == 1);
    // subdividing can remove triangles but never create one
    CHECK_FALSE((has_adjacent_triangles(h.abstract()) && !has_adjacent_triangles(g.abstract())));
    CHECK_THROWS_AS(subdivide_edge(h, 0, 1), Error);  // no longer an edge
}

TEST_CASE("vertex deletion with id maps") {
    EmbeddedGraph g = k4_planar();
    std::vector<int> oldToNew, newToOld;
    EmbeddedGraph h = delete_vertices(g, {1}, &oldToNew, &newToOld);
    CHECK(h.n() == 3);
    CHECK(h.m() == 3);
    CHECK(oldToNew[1] == -1);
    CHECK(oldToNew[0] == 0);
    CHECK(oldToNew[2] == 1);
    CHECK(oldToNew[3] == 2);
    for (int x = 0; x < 3; ++x) CHECK(oldToNew[newToOld[x]] == x);
    // cyclic order of survivors kept: rot[0] was 1,3,2 -> 3,2 becomes 2,1
    CHECK(h.rot[0] == std::vector<int>{2, 1});
}

TEST_CASE("degree-two bookkeeping and convenience") {
    EmbeddedGraph g = subdivide_edge(k7_torus(), 0, 1);
    CHECK(two_neighbor_count(g, 0) == 1);
    CHECK(two_neighbor_count(g, 2) == 0);
    CHECK(is_convenient(g, 0));        // even degree but a 2-neighbor
    CHECK_FALSE(is_convenient(g, 2));  // degree 6, even, no 2-neighbor
    CHECK_FALSE(is_convenient(g, 7));  // the 2-vertex itself is too small
    EmbeddedGraph fan{{{1, 2, 3, 4, 5}, {0, 2}, {1, 0, 3}, {2, 0, 4}, {3, 0, 5}, {4, 0}}};
    CHECK(is_convenient(fan, 0));  // odd degree suffices
}

TEST_CASE("face two-vertex census") {
    EmbeddedGraph g = subdivide_edge(k7_torus(), 0, 1);
    FaceSet faces = trace_faces(g);
    int fourOne = 0, plainTriangles = 0;
    for (int f = 0; f < faces.count(); ++f) {
        if (is_four_one_face(g, faces, f)) {
            ++fourOne;
            CHECK(faces.deg(f) == 4);
            CHECK(face_two_vertex_count(g, faces, f) == 1);
        }
        if (faces.deg(f) == 3) {
            ++plainTriangles;
            CHECK(face_two_vertex_count(g, faces, f) == 0);
        }
    }
    CHECK(fourOne == 2);  // both faces at the split edge
    CHECK(plainTriangles == 12);
}

TEST_CASE("special six-vertex recognition on the catalog gadget") {
    EmbeddedGraph g = load_gadget("specialsix.rot");
    FaceSet faces = trace_faces(g);
    int specials = 0, specialVertex = -1;
    for (int v = 0; v < g.n(); ++v)
        if (is_special_six(g, faces, v)) {
            ++specials;
            specialVertex = v;
        }
    REQUIRE(specials >= 1);
    CHECK(g.degree(specialVertex) == 6);
    CHECK_FALSE(is_convenient(g, specialVertex));
    auto alignments = special_alignments(g, faces, specialVertex);
    REQUIRE(!alignments.empty());
    for (const auto& al : alignments) {
        std::set<int> nb(al.neighbors.begin(), al.neighbors.end());
        CHECK(nb.size() == 6);
        for (int u : al.neighbors) CHECK(g.has_edge(specialVertex, u));
    }
    // no special vertex in clean instances
    FaceSet k7faces = trace_faces(k7_torus());
    for (int v = 0; v < 7; ++v) CHECK_FALSE(is_special_six(k7_torus(), k7faces, v));
}

TEST_CASE("validation catches broken rotation systems") {
    EmbeddedGraph g = k4_planar();
    CHECK_NOTHROW(validate(g));
    EmbeddedGraph bad = g;
    bad.rot[0] = {1, 3};  // 0 lists 2 nowhere, but 2 lists 0
    CHECK_THROWS_AS(validate(bad), Error);
    AbstractGraph a = g.abstract();
    CHECK_NOTHROW(validate(a));
    a.adj[0].push_back(0);
    CHECK_THROWS_AS(validate(a), Error);
}
