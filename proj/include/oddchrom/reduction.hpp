#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "oddchrom/coloring.hpp"
#include "oddchrom/errors.hpp"
#include "oddchrom/graph.hpp"

namespace oddchrom {

// Reducible configurations, in detection priority order. Earlier tags shield
// later ones: each scanner below may assume no earlier tag is present when
// its reduction relies on that (the reducers re-validate and throw
// ConfigurationNotPresent rather than trust the caller).
enum class ConfigTag {
    ThreeVertex,             // a vertex of degree exactly 3
    AdjacentTwoVertices,     // two adjacent 2-vertices
    FiveFaceTwoTwoVertices,  // a 5-face carrying two or more 2-vertices
    ThreeFaceWithTwoVertex,  // a 3-face carrying a 2-vertex
    AdjacentConvenient,      // two adjacent convenient vertices
    ThreeFaceBadIncidence,   // a 3-face with at most one non-convenient 6+-corner
    OverloadedKVertex,       // a k-vertex (4<=k<=7) with >= 2k-7 neighbors that are 2-vertices or convenient
    FourFaceTwoTwoVertices,  // a 4-face carrying two or more 2-vertices
    AdjacentFourVertices,    // two adjacent vertices of degree exactly 4
    SpecialSixNeighbor,      // a special 6-vertex with a 5_2- or 6_4-neighbor at an aligned position
    FivePath,                // a 2-path u-v-w, u and w both 5_2, both flanking faces 4_1
};
inline constexpr int kConfigTagCount = 11;

const char* tag_name(ConfigTag tag);  // kebab-case, e.g. "three-vertex"
std::optional<ConfigTag> tag_from_name(const std::string& name);

// actors, per tag:
//   ThreeVertex {v}; AdjacentTwoVertices {v, u} with v < u (v is deleted);
//   FiveFaceTwoTwoVertices / ThreeFaceBadIncidence / FourFaceTwoTwoVertices:
//     the face walk, rotated so the lexicographically smallest vertex leads;
//   ThreeFaceWithTwoVertex {w, u, v}: w the lowest 2-vertex corner, then the
//     walk continued from w; AdjacentConvenient {u, v} with u < v;
//   OverloadedKVertex {v}; AdjacentFourVertices {u, v} with u < v;
//   SpecialSixNeighbor {v, v1..v6, vj}: the special vertex, its alignment,
//     then the offending aligned neighbor repeated (j recoverable by lookup);
//   FivePath {u, v, w, x, y}: middle 2-vertex v, endpoints u < w, x completes
//     the 4-face through u-v-w, y the one through w-v-u.
struct Configuration {
    ConfigTag tag;
    std::vector<int> actors;
    bool operator==(const Configuration&) const = default;
};

// The induction measure: lexicographic over
//   (#4+-vertices, #edges with both endpoints 4+, #edges).
struct Measure {
    long long fourPlusVertices = 0;
    long long fourPlusAdjacencies = 0;
    long long edges = 0;
    auto operator<=>(const Measure&) const = default;
};
Measure measure_of(const AbstractGraph& g);

// All instances of one tag, deterministically ordered (vertex/edge scans
// ascending, face scans by face id).
std::vector<Configuration> find_instances(const EmbeddedGraph& g, const FaceSet& faces,
                                          ConfigTag tag);

// First instance of the highest-priority present tag, or nullopt.
std::optional<Configuration> find_configuration(const EmbeddedGraph& g);
std::optional<Configuration> find_configuration(const EmbeddedGraph& g, const FaceSet& faces);

// Every configuration instance of every tag: the structural-predicate sweep.
// Empty result is equivalent to find_configuration returning nullopt.
std::vector<Configuration> check_structural_lemmas(const EmbeddedGraph& g);
std::vector<Configuration> check_structural_lemmas(const EmbeddedGraph& g, const FaceSet& faces);

struct ReducedInstance {
    EmbeddedGraph reduced;
    Configuration cfg;
    std::vector<int> oldToNew;  // host id -> reduced id, -1 when deleted
    std::vector<int> newToOld;  // reduced id -> host id, -1 when fresh
    bool embeddingPreserved = true;
    Measure before, after;
};

// Builds the reduced graph for cfg: vertex deletion, edge subdivision, or the
// AdjacentFourVertices rewiring (which abandons the embedding; the reduced
// rotations are then plain sorted adjacency). Verifies that the measure
// strictly decreases. Throws ConfigurationNotPresent when cfg does not match
// the graph.
ReducedInstance apply_reduction(const EmbeddedGraph& g, const Configuration& cfg);

// Raised when neither the lemma's recoloring recipe nor the bounded local
// search extends a valid reduced coloring; carries both for diagnosis.
class ExtensionError : public Error {
  public:
    ExtensionError(Configuration cfg, Coloring reducedColoring, const std::string& msg)
        : Error(ErrorKind::ExtensionFailure, msg),
          cfg_(std::move(cfg)),
          reduced_(std::move(reducedColoring)) {}
    const Configuration& configuration() const { return cfg_; }
    const Coloring& reduced_coloring() const { return reduced_; }

  private:
    Configuration cfg_;
    Coloring reduced_;
};

// Lifts an odd 8-coloring of r.reduced back onto g: translate through the
// vertex map, run the tag's recoloring recipe, verify; if the recipe leaves
// the coloring invalid, exhaustively retry all palette assignments of at most
// three repair vertices. recipeOnly reports whether the recipe alone
// sufficed. Throws ExtensionError when even the local search fails.
Coloring extend_coloring(const EmbeddedGraph& g, const ReducedInstance& r,
                         const Coloring& reducedColoring, bool* recipeOnly = nullptr);

struct ReductionStep {
    Configuration cfg;
    Measure before, after;
};

struct DriverResult {
    Coloring coloring;
    std::vector<ReductionStep> trace;
    int fallbackExtensions = 0;  // extensions that needed the local search
    int exactSolves = 0;         // leaves handled by the solver
    long long solverNodes = 0;
};

// The endgame: repeatedly find a configuration, reduce, recurse, extend.
// Leaves (no configuration, lost embedding, or depth cap) go to the exact
// solver at k = 8. Requires a connected host of genus <= 1 with no adjacent
// triangles; throws HypothesisViolation otherwise and FallbackExhausted if
// some leaf admits no odd 8-coloring.
DriverResult color_without_adjacent_triangles(const EmbeddedGraph& g);

}  // namespace oddchrom
