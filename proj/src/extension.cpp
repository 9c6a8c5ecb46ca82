#include <algorithm>
#include <array>
#include <set>

#include "oddchrom/reduction.hpp"

// Lifting a reduced coloring back to the host graph. Every tag follows the
// same shape: translate colors through the vertex map, run the recoloring
// recipe, verify; when the recipe's avoidance sets overconstrain (they may,
// off the minimal-counterexample structure), an exhaustive search over at
// most three repair vertices settles whether any local completion exists.

namespace oddchrom {
namespace {

constexpr int kPalette = 8;

int pick(const std::set<int>& avoid) {
    for (int col = 1; col <= kPalette; ++col)
        if (!avoid.count(col)) return col;
    return 0;
}

int other_end(const EmbeddedGraph& g, int twoVertex, int notThis) {
    return g.rot[twoVertex][0] == notThis ? g.rot[twoVertex][1] : g.rot[twoVertex][0];
}

// Smallest color of odd multiplicity among v's colored neighbors, skipping
// one vertex; 0 when none. Protecting it keeps v's odd set non-empty when
// the skipped vertex is recolored.
int odd_minus(const AbstractGraph& a, const Coloring& c, int v, int skip) {
    std::array<int, kPalette + 1> mult{};
    for (int u : a.adj[v])
        if (u != skip && c.color[u] > 0 && c.color[u] <= kPalette) ++mult[c.color[u]];
    for (int col = 1; col <= kPalette; ++col)
        if (mult[col] % 2 == 1) return col;
    return 0;
}

bool valid(const AbstractGraph& a, const Coloring& c) {
    return verify_odd_coloring(a, c, kPalette);
}

// Everything a new color of t must dodge so that recoloring t cannot break
// any vertex other than t's neighbors' parity at exactly the old color:
// properness, 2-neighbors' far-end colors, other neighbors' smallest odd
// colors, and t's current color (forcing an actual change).
std::set<int> recolor_avoid(const EmbeddedGraph& g, const AbstractGraph& a, const Coloring& c,
                            int t) {
    std::set<int> avoid{c.color[t]};
    for (int u : g.rot[t]) {
        avoid.insert(c.color[u]);
        if (g.degree(u) == 2)
            avoid.insert(c.color[other_end(g, u, t)]);
        else if (int m = odd_minus(a, c, u, t))
            avoid.insert(m);
    }
    avoid.erase(0);
    return avoid;
}

void try_recolor_two_neighbor(const EmbeddedGraph& g, Coloring& c, int v) {
    try {
        recolor_two_neighbor(g, c, v, kPalette);
    } catch (const Error&) {
        // leave as is; the verifier and fallback judge the result
    }
}

int deleted_vertex(const ReducedInstance& r) {
    for (int old = 0; old < static_cast<int>(r.oldToNew.size()); ++old)
        if (r.oldToNew[old] == -1) return old;
    return -1;
}

// Endpoints of the edge that was split: the fresh 2-vertex's neighbors keep
// their host ids under subdivision.
std::pair<int, int> subdivided_pair(const ReducedInstance& r) {
    int fresh = -1;
    for (int x = 0; x < static_cast<int>(r.newToOld.size()); ++x)
        if (r.newToOld[x] == -1) fresh = x;
    const auto& nb = r.reduced.rot[fresh];
    return {nb[0], nb[1]};
}

int two_vertex_on_face(const EmbeddedGraph& g, const FaceSet& faces, int f) {
    for (int x : faces.walk[f])
        if (g.degree(x) == 2) return x;
    return -1;
}

// The face holding the corner a-v-b; -1 when absent.
int corner_face(const FaceSet& faces, int v, int a, int b) {
    for (int f : {faces.at(v, a), faces.at(v, b)}) {
        const auto& w = faces.walk[f];
        int len = static_cast<int>(w.size());
        for (int i = 0; i < len; ++i) {
            if (w[i] != v) continue;
            int prev = w[(i + len - 1) % len], next = w[(i + 1) % len];
            if ((prev == a && next == b) || (prev == b && next == a)) return f;
        }
    }
    return -1;
}

std::vector<int> dedup_take3(std::vector<int> xs) {
    std::vector<int> out;
    for (int x : xs)
        if (x >= 0 && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    if (out.size() > 3) out.resize(3);
    return out;
}

int lowest_two_neighbor(const EmbeddedGraph& g, int v) {
    int best = -1;
    for (int u : g.rot[v])
        if (g.degree(u) == 2 && (best == -1 || u < best)) best = u;
    return best;
}

// ---- per-tag recipes; each returns the fallback repair set ----

std::vector<int> recipe_three_vertex(const EmbeddedGraph& g, const AbstractGraph& a,
                                     Coloring& c, const std::vector<int>& actors) {
    int v = actors[0];
    std::set<int> avoid;
    for (int t : g.rot[v]) {
        avoid.insert(c.color[t]);
        if (int m = odd_witness(a, c, t)) avoid.insert(m);
    }
    int col = pick(avoid);
    c.color[v] = col ? col : 1;
    return {v};
}

std::vector<int> recipe_adjacent_two(const EmbeddedGraph& g, const AbstractGraph& a, Coloring& c,
                                     const std::vector<int>& actors) {
    int v = actors[0], u = actors[1];
    int v2 = other_end(g, v, u);
    int u2 = other_end(g, u, v);
    std::set<int> avoid{c.color[u], c.color[v2], c.color[u2]};
    if (int m = odd_witness(a, c, v2)) avoid.insert(m);
    int col = pick(avoid);
    c.color[v] = col ? col : 1;
    return {v, u};
}

std::vector<int> recipe_split_convenient(const EmbeddedGraph& g, Coloring& c,
                                         const ReducedInstance& r) {
    auto [x, y] = subdivided_pair(r);
    try_recolor_two_neighbor(g, c, x);
    try_recolor_two_neighbor(g, c, y);
    return dedup_take3({lowest_two_neighbor(g, x), lowest_two_neighbor(g, y), x, y});
}

std::vector<int> recipe_three_face_two(const EmbeddedGraph& g, const AbstractGraph& a,
                                       Coloring& c, const std::vector<int>& actors) {
    int w = actors[0], u = actors[1], v = actors[2];
    std::set<int> avoid{c.color[u], c.color[v]};
    if (int m = odd_witness(a, c, u)) avoid.insert(m);
    if (int m = odd_witness(a, c, v)) avoid.insert(m);
    int col = pick(avoid);
    c.color[w] = col ? col : 1;
    return {w, u, v};
}

void overloaded_recipe(const EmbeddedGraph& g, const AbstractGraph& a, Coloring& c, int v) {
    std::set<int> avoid;
    for (int t : g.rot[v]) {
        if (g.degree(t) == 2) {
            avoid.insert(c.color[other_end(g, t, v)]);
        } else if (is_convenient(g, t)) {
            avoid.insert(c.color[t]);
        } else {
            avoid.insert(c.color[t]);
            if (int m = odd_witness(a, c, t)) avoid.insert(m);
        }
    }
    int col = pick(avoid);
    c.color[v] = col ? col : 1;
    // Restore properness toward 2-neighbors the avoidance set skipped.
    for (int t : g.rot[v]) {
        if (g.degree(t) != 2 || c.color[t] != c.color[v]) continue;
        int e = other_end(g, t, v);
        std::set<int> av{c.color[v], c.color[e]};
        if (int m = odd_minus(a, c, e, t)) av.insert(m);
        if (int col2 = pick(av)) c.color[t] = col2;
    }
    for (int t : g.rot[v])
        if (is_convenient(g, t) && odd_witness(a, c, t) == 0) try_recolor_two_neighbor(g, c, t);
    if (odd_witness(a, c, v) == 0) {
        // Even-degree v may end with an all-even neighborhood; one 2-neighbor
        // recolor is always enough when the lemma applies.
        for (int t : g.rot[v]) {
            if (g.degree(t) != 2) continue;
            int save = c.color[t];
            for (int col2 = 1; col2 <= kPalette; ++col2) {
                c.color[t] = col2;
                if (valid(a, c)) return;
            }
            c.color[t] = save;
        }
    }
}

std::vector<int> recipe_overloaded(const EmbeddedGraph& g, const AbstractGraph& a, Coloring& c,
                                   int v) {
    overloaded_recipe(g, a, c, v);
    std::vector<int> set{v};
    for (int t : g.rot[v])
        if (g.degree(t) == 2) set.push_back(t);
    for (int t : g.rot[v]) set.push_back(t);
    return dedup_take3(set);
}

std::vector<int> recipe_four_face_two(const EmbeddedGraph& g, const AbstractGraph& a, Coloring& c,
                                      const ReducedInstance& r) {
    int d = deleted_vertex(r);
    int v2 = g.rot[d][0], v4 = g.rot[d][1];
    std::set<int> avoid{c.color[v2], c.color[v4]};
    if (int m = odd_witness(a, c, v2)) avoid.insert(m);
    if (int m = odd_witness(a, c, v4)) avoid.insert(m);
    int col = pick(avoid);
    c.color[d] = col ? col : 1;
    return {d, v2, v4};
}

std::vector<int> recipe_adjacent_four(const EmbeddedGraph& g, const AbstractGraph& a, Coloring& c,
                                      const std::vector<int>& actors) {
    int u = actors[0], v = actors[1];
    auto others = [&](int center, int skip) {
        std::vector<int> out;
        for (int t : g.rot[center])
            if (t != skip) out.push_back(t);
        std::sort(out.begin(), out.end());
        return out;
    };
    std::set<int> avoidU;
    for (int t : others(u, v)) {
        avoidU.insert(c.color[t]);
        if (int m = odd_witness(a, c, t)) avoidU.insert(m);
    }
    int colU = pick(avoidU);
    c.color[u] = colU ? colU : 1;
    std::set<int> avoidV{c.color[u]};
    for (int t : others(v, u)) {
        avoidV.insert(c.color[t]);
        if (int m = odd_witness(a, c, t)) avoidV.insert(m);
    }
    int colV = pick(avoidV);
    c.color[v] = colV ? colV : 1;
    return {u, v};
}

std::vector<int> recipe_special_six(const EmbeddedGraph& g, const AbstractGraph& a,
                                    const FaceSet& faces, Coloring& c,
                                    const std::vector<int>& actors) {
    int v = actors[0], vj = actors[7];
    std::array<int, 6> u;
    std::copy(actors.begin() + 1, actors.begin() + 7, u.begin());
    int j = static_cast<int>(std::find(u.begin(), u.end(), vj) - u.begin()) + 1;
    if (j == 4 || j == 5) u = {u[3], u[2], u[1], u[0], u[5], u[4]};  // mirror; pattern survives
    bool caseA = (j == 1 || j == 4);

    std::vector<int> fallback{v, vj};
    if (int f6 = corner_face(faces, v, u[5], u[0]); f6 >= 0)
        if (int x6 = two_vertex_on_face(g, faces, f6); x6 >= 0) fallback.push_back(x6);

    if (valid(a, c)) return fallback;

    if (caseA) {
        try_recolor_two_neighbor(g, c, u[0]);
        if (valid(a, c)) return fallback;
        // Hand v a witness: moving u[0] off its color makes that color odd
        // around v, as long as no neighbor of u[0] is disturbed.
        if (int col = pick(recolor_avoid(g, a, c, u[0]))) c.color[u[0]] = col;
        if (valid(a, c)) return fallback;
    } else {
        int oldV = c.color[v], old6 = c.color[u[5]];
        c.color[v] = 0;
        std::set<int> avoid6;
        for (int t : g.rot[u[5]]) {
            if (t == v) continue;
            avoid6.insert(c.color[t]);
            if (g.degree(t) == 2)
                avoid6.insert(c.color[other_end(g, t, u[5])]);
            else if (int m = odd_minus(a, c, t, u[5]))
                avoid6.insert(m);
        }
        // If v's other five neighbor colors have a lone odd color, keep it.
        {
            std::array<int, kPalette + 1> mult{};
            for (int i = 0; i < 5; ++i) ++mult[c.color[u[i]]];
            std::vector<int> odd;
            for (int col = 1; col <= kPalette; ++col)
                if (mult[col] % 2 == 1) odd.push_back(col);
            if (odd.size() == 1) avoid6.insert(odd.front());
        }
        avoid6.erase(0);
        int col6 = pick(avoid6);
        c.color[u[5]] = col6 ? col6 : old6;
        c.color[v] = oldV;  // placeholder; recolored below with full knowledge
        if (!valid(a, c)) {
            std::set<int> avoidV;
            for (int i = 0; i < 6; ++i) {
                avoidV.insert(c.color[u[i]]);
                if (!is_convenient(g, u[i]))
                    if (int m = odd_minus(a, c, u[i], v)) avoidV.insert(m);
            }
            if (int colV = pick(avoidV)) c.color[v] = colV;
        }
        if (valid(a, c)) return fallback;
    }

    // Shared tail: recolor v around its aligned neighborhood, then give every
    // convenient aligned neighbor back its odd color.
    std::set<int> avoidV{c.color[v]};
    for (int i = 0; i < 6; ++i) {
        avoidV.insert(c.color[u[i]]);
        if (!is_convenient(g, u[i]))
            if (int m = odd_minus(a, c, u[i], v)) avoidV.insert(m);
    }
    if (int colV = pick(avoidV)) c.color[v] = colV;
    for (int i = 0; i < 6; ++i)
        if (is_convenient(g, u[i]) && odd_witness(a, c, u[i]) == 0)
            try_recolor_two_neighbor(g, c, u[i]);
    return fallback;
}

std::vector<int> recipe_five_path(const EmbeddedGraph& g, const AbstractGraph& a, Coloring& c,
                                  const std::vector<int>& actors) {
    int u = actors[0], v = actors[1], w = actors[2];
    std::vector<int> fallback{u, w, v};
    if (valid(a, c)) return fallback;
    if (int col = pick(recolor_avoid(g, a, c, w))) c.color[w] = col;
    if (valid(a, c)) return fallback;
    if (int col = pick(recolor_avoid(g, a, c, u))) c.color[u] = col;
    return fallback;
}

}  // namespace

Coloring extend_coloring(const EmbeddedGraph& g, const ReducedInstance& r,
                         const Coloring& reducedColoring, bool* recipeOnly) {
    if (recipeOnly) *recipeOnly = false;
    if (!verify_odd_coloring(r.reduced, reducedColoring, kPalette))
        throw ExtensionError(r.cfg, reducedColoring,
                             "reduced coloring is not a valid odd 8-coloring");

    Coloring c(g.n());
    for (int old = 0; old < g.n(); ++old)
        if (r.oldToNew[old] >= 0) c.color[old] = reducedColoring.color[r.oldToNew[old]];

    AbstractGraph a = g.abstract();
    const auto& actors = r.cfg.actors;
    std::vector<int> repair;
    switch (r.cfg.tag) {
        case ConfigTag::ThreeVertex:
            repair = recipe_three_vertex(g, a, c, actors);
            break;
        case ConfigTag::AdjacentTwoVertices:
            repair = recipe_adjacent_two(g, a, c, actors);
            break;
        case ConfigTag::FiveFaceTwoTwoVertices:
        case ConfigTag::AdjacentConvenient:
        case ConfigTag::SpecialSixNeighbor:
        case ConfigTag::FivePath: {
            if (r.cfg.tag == ConfigTag::SpecialSixNeighbor) {
                FaceSet faces = trace_faces(g);
                repair = recipe_special_six(g, a, faces, c, actors);
            } else if (r.cfg.tag == ConfigTag::FivePath) {
                repair = recipe_five_path(g, a, c, actors);
            } else {
                repair = recipe_split_convenient(g, c, r);
            }
            break;
        }
        case ConfigTag::ThreeFaceWithTwoVertex:
            repair = recipe_three_face_two(g, a, c, actors);
            break;
        case ConfigTag::ThreeFaceBadIncidence:
            repair = recipe_overloaded(g, a, c, deleted_vertex(r));
            break;
        case ConfigTag::OverloadedKVertex:
            repair = recipe_overloaded(g, a, c, actors[0]);
            break;
        case ConfigTag::FourFaceTwoTwoVertices:
            repair = recipe_four_face_two(g, a, c, r);
            break;
        case ConfigTag::AdjacentFourVertices:
            repair = recipe_adjacent_four(g, a, c, actors);
            break;
    }

    if (valid(a, c)) {
        if (recipeOnly) *recipeOnly = true;
        return c;
    }

    repair = dedup_take3(repair);
    if (repair.empty()) repair.push_back(actors[0]);
    std::vector<int> saved;
    for (int x : repair) saved.push_back(c.color[x]);
    std::vector<int> assign(repair.size(), 1);
    while (true) {
        for (size_t i = 0; i < repair.size(); ++i) c.color[repair[i]] = assign[i];
        if (valid(a, c)) return c;
        size_t i = repair.size();
        while (i > 0 && assign[i - 1] == kPalette) assign[--i] = 1;
        if (i == 0) break;
        ++assign[i - 1];
    }
    for (size_t i = 0; i < repair.size(); ++i) c.color[repair[i]] = saved[i];
    throw ExtensionError(r.cfg, reducedColoring,
                         std::string("no local recoloring over the repair set completes tag ") +
                             tag_name(r.cfg.tag));
}

}  // namespace oddchrom
