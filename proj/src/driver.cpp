#include "oddchrom/reduction.hpp"
#include "oddchrom/solver.hpp"

namespace oddchrom {
namespace {

Coloring solve_leaf(const AbstractGraph& a, DriverResult& out) {
    long long nodes = 0;
    auto c = solve_exact_k(a, 8, &nodes);
    out.solverNodes += nodes;
    ++out.exactSolves;
    if (!c)
        throw Error(ErrorKind::FallbackExhausted,
                    "irreducible instance admits no odd 8-coloring");
    return *c;
}

Coloring drive(const EmbeddedGraph& g, DriverResult& out, int depth) {
    std::optional<Configuration> cfg;
    if (depth > 0) cfg = find_configuration(g);
    if (!cfg) return solve_leaf(g.abstract(), out);

    ReducedInstance r = apply_reduction(g, *cfg);
    out.trace.push_back({r.cfg, r.before, r.after});
    // The rewiring tag abandons the rotation system, so its reduced instance
    // cannot be scanned for face-shaped configurations; solve it directly.
    Coloring reduced = r.embeddingPreserved ? drive(r.reduced, out, depth - 1)
                                            : solve_leaf(r.reduced.abstract(), out);
    bool recipeOnly = false;
    Coloring c = extend_coloring(g, r, reduced, &recipeOnly);
    if (!recipeOnly) ++out.fallbackExtensions;
    return c;
}

}  // namespace

DriverResult color_without_adjacent_triangles(const EmbeddedGraph& g) {
    validate(g);
    if (!is_connected(g.abstract()))
        throw Error(ErrorKind::HypothesisViolation, "input graph is not connected");
    if (euler_genus(g) > 1)
        throw Error(ErrorKind::HypothesisViolation, "embedding has euler genus > 1");
    if (has_adjacent_triangles(g.abstract()))
        throw Error(ErrorKind::HypothesisViolation, "embedding has adjacent triangles");

    DriverResult out;
    out.coloring = drive(g, out, 4 * g.n() + 8);
    if (!verify_odd_coloring(g.abstract(), out.coloring, 8))
        throw Error(ErrorKind::ExtensionFailure,
                    "internal: driver produced an invalid coloring");
    return out;
}

}  // namespace oddchrom
