#include "oddchrom/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace oddchrom {

const char* tag_name(ConfigTag tag) {
    switch (tag) {
        case ConfigTag::ThreeVertex: return "three-vertex";
        case ConfigTag::AdjacentTwoVertices: return "adjacent-two-vertices";
        case ConfigTag::FiveFaceTwoTwoVertices: return "five-face-two-two-vertices";
        case ConfigTag::ThreeFaceWithTwoVertex: return "three-face-with-two-vertex";
        case ConfigTag::AdjacentConvenient: return "adjacent-convenient";
        case ConfigTag::ThreeFaceBadIncidence: return "three-face-bad-incidence";
        case ConfigTag::OverloadedKVertex: return "overloaded-k-vertex";
        case ConfigTag::FourFaceTwoTwoVertices: return "four-face-two-two-vertices";
        case ConfigTag::AdjacentFourVertices: return "adjacent-four-vertices";
        case ConfigTag::SpecialSixNeighbor: return "special-six-neighbor";
        case ConfigTag::FivePath: return "five-path";
    }
    return "?";
}

std::optional<ConfigTag> tag_from_name(const std::string& name) {
    for (int i = 0; i < kConfigTagCount; ++i) {
        auto tag = static_cast<ConfigTag>(i);
        if (name == tag_name(tag)) return tag;
    }
    return std::nullopt;
}

Measure measure_of(const AbstractGraph& g) {
    Measure m;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 4) ++m.fourPlusVertices;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.adj[u])
            if (u < v && g.degree(u) >= 4 && g.degree(v) >= 4) ++m.fourPlusAdjacencies;
    m.edges = g.m();
    return m;
}

namespace {

// Rotates a face walk so the smallest vertex leads, direction kept.
std::vector<int> canonical_walk(const std::vector<int>& walk) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(walk.size()); ++i)
        if (walk[i] < walk[best]) best = i;
    std::vector<int> out;
    out.reserve(walk.size());
    for (int i = 0; i < static_cast<int>(walk.size()); ++i)
        out.push_back(walk[(best + i) % walk.size()]);
    return out;
}

int non_convenient_six_plus_corners(const EmbeddedGraph& g, const std::vector<int>& walk) {
    int cnt = 0;
    for (int x : walk)
        if (g.degree(x) >= 6 && !is_convenient(g, x)) ++cnt;
    return cnt;
}

bool is_five_two(const EmbeddedGraph& g, int v) {
    return g.degree(v) == 5 && two_neighbor_count(g, v) == 2;
}
bool is_six_four(const EmbeddedGraph& g, int v) {
    return g.degree(v) == 6 && two_neighbor_count(g, v) == 4;
}

}  // namespace

std::vector<Configuration> find_instances(const EmbeddedGraph& g, const FaceSet& faces,
                                          ConfigTag tag) {
    std::vector<Configuration> out;
    switch (tag) {
        case ConfigTag::ThreeVertex:
            for (int v = 0; v < g.n(); ++v)
                if (g.degree(v) == 3) out.push_back({tag, {v}});
            break;

        case ConfigTag::AdjacentTwoVertices:
            for (auto [u, v] : g.edges())
                if (g.degree(u) == 2 && g.degree(v) == 2) out.push_back({tag, {u, v}});
            break;

        case ConfigTag::FiveFaceTwoTwoVertices:
            for (int f = 0; f < faces.count(); ++f)
                if (faces.deg(f) == 5 && face_two_vertex_count(g, faces, f) >= 2)
                    out.push_back({tag, canonical_walk(faces.walk[f])});
            break;

        case ConfigTag::ThreeFaceWithTwoVertex:
            for (int f = 0; f < faces.count(); ++f) {
                if (faces.deg(f) != 3) continue;
                const auto& walk = faces.walk[f];
                int w = -1;
                for (int x : walk)
                    if (g.degree(x) == 2 && (w == -1 || x < w)) w = x;
                if (w == -1) continue;
                int i = static_cast<int>(std::find(walk.begin(), walk.end(), w) - walk.begin());
                out.push_back({tag, {w, walk[(i + 1) % 3], walk[(i + 2) % 3]}});
            }
            break;

        case ConfigTag::AdjacentConvenient:
            for (auto [u, v] : g.edges())
                if (is_convenient(g, u) && is_convenient(g, v)) out.push_back({tag, {u, v}});
            break;

        case ConfigTag::ThreeFaceBadIncidence:
            for (int f = 0; f < faces.count(); ++f)
                if (faces.deg(f) == 3 && non_convenient_six_plus_corners(g, faces.walk[f]) <= 1)
                    out.push_back({tag, canonical_walk(faces.walk[f])});
            break;

        case ConfigTag::OverloadedKVertex:
            for (int v = 0; v < g.n(); ++v) {
                int k = g.degree(v);
                if (k < 4 || k > 7) continue;
                int loaded = 0;
                for (int u : g.rot[v])
                    if (g.degree(u) == 2 || is_convenient(g, u)) ++loaded;
                if (loaded >= 2 * k - 7) out.push_back({tag, {v}});
            }
            break;

        case ConfigTag::FourFaceTwoTwoVertices:
            for (int f = 0; f < faces.count(); ++f)
                if (faces.deg(f) == 4 && face_two_vertex_count(g, faces, f) >= 2)
                    out.push_back({tag, canonical_walk(faces.walk[f])});
            break;

        case ConfigTag::AdjacentFourVertices:
            for (auto [u, v] : g.edges())
                if (g.degree(u) == 4 && g.degree(v) == 4) out.push_back({tag, {u, v}});
            break;

        case ConfigTag::SpecialSixNeighbor:
            for (int v = 0; v < g.n(); ++v) {
                std::set<int> offendersSeen;
                for (const auto& al : special_alignments(g, faces, v)) {
                    for (int j : {1, 4, 5, 6}) {
                        int vj = al.neighbors[j - 1];
                        if (!is_five_two(g, vj) && !is_six_four(g, vj)) continue;
                        if (!offendersSeen.insert(vj).second) continue;
                        std::vector<int> actors{v};
                        actors.insert(actors.end(), al.neighbors.begin(), al.neighbors.end());
                        actors.push_back(vj);
                        out.push_back({tag, std::move(actors)});
                    }
                }
            }
            break;

        case ConfigTag::FivePath:
            for (int v = 0; v < g.n(); ++v) {
                if (g.degree(v) != 2) continue;
                int u = std::min(g.rot[v][0], g.rot[v][1]);
                int w = std::max(g.rot[v][0], g.rot[v][1]);
                if (!is_five_two(g, u) || !is_five_two(g, w)) continue;
                int f1 = faces.at(u, v), f2 = faces.at(w, v);
                if (!is_four_one_face(g, faces, f1) || !is_four_one_face(g, faces, f2)) continue;
                // Walk of f1 runs ... u v w x ...; x closes the face back to u.
                const auto& w1 = faces.walk[f1];
                const auto& w2 = faces.walk[f2];
                int i1 = static_cast<int>(std::find(w1.begin(), w1.end(), u) - w1.begin());
                int i2 = static_cast<int>(std::find(w2.begin(), w2.end(), w) - w2.begin());
                if (w1[(i1 + 1) % 4] != v || w1[(i1 + 2) % 4] != w) continue;
                if (w2[(i2 + 1) % 4] != v || w2[(i2 + 2) % 4] != u) continue;
                int x = w1[(i1 + 3) % 4], y = w2[(i2 + 3) % 4];
                out.push_back({tag, {u, v, w, x, y}});
            }
            break;
    }
    return out;
}

std::optional<Configuration> find_configuration(const EmbeddedGraph& g) {
    return find_configuration(g, trace_faces(g));
}

std::optional<Configuration> find_configuration(const EmbeddedGraph& g, const FaceSet& faces) {
    for (int i = 0; i < kConfigTagCount; ++i) {
        auto found = find_instances(g, faces, static_cast<ConfigTag>(i));
        if (!found.empty()) return found.front();
    }
    return std::nullopt;
}

std::vector<Configuration> check_structural_lemmas(const EmbeddedGraph& g) {
    return check_structural_lemmas(g, trace_faces(g));
}

std::vector<Configuration> check_structural_lemmas(const EmbeddedGraph& g, const FaceSet& faces) {
    std::vector<Configuration> out;
    for (int i = 0; i < kConfigTagCount; ++i) {
        auto found = find_instances(g, faces, static_cast<ConfigTag>(i));
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

namespace {

[[noreturn]] void not_present(const Configuration& cfg, const std::string& why) {
    throw Error(ErrorKind::ConfigurationNotPresent,
                std::string(tag_name(cfg.tag)) + ": " + why);
}

void require(bool cond, const Configuration& cfg, const std::string& why) {
    if (!cond) not_present(cfg, why);
}

// Checks that the actors describe a face of g and returns its id.
int face_of_walk(const EmbeddedGraph& g, const FaceSet& faces, const Configuration& cfg,
                 const std::vector<int>& walk) {
    for (int x : walk) require(x >= 0 && x < g.n(), cfg, "actor out of range");
    int f;
    try {
        f = faces.at(walk[0], walk[1]);
    } catch (const Error&) {
        not_present(cfg, "actor walk is not a face boundary");
    }
    if (canonical_walk(faces.walk[f]) != canonical_walk(walk))
        not_present(cfg, "actor walk is not a face boundary");
    return f;
}

ReducedInstance delete_one(const EmbeddedGraph& g, const Configuration& cfg, int victim) {
    ReducedInstance r;
    r.cfg = cfg;
    r.reduced = delete_vertices(g, {victim}, &r.oldToNew, &r.newToOld);
    return r;
}

ReducedInstance subdivide_one(const EmbeddedGraph& g, const Configuration& cfg, int u, int v) {
    ReducedInstance r;
    r.cfg = cfg;
    r.reduced = subdivide_edge(g, u, v);
    r.oldToNew.resize(g.n());
    r.newToOld.resize(g.n() + 1);
    for (int i = 0; i < g.n(); ++i) r.oldToNew[i] = r.newToOld[i] = i;
    r.newToOld[g.n()] = -1;
    return r;
}

// The unique walk-adjacent pair of non-2-vertices on a 5-face carrying two
// 2-vertices; both endpoints are 4+ once smaller configurations are absent.
std::pair<int, int> five_face_pair(const EmbeddedGraph& g, const Configuration& cfg,
                                   const std::vector<int>& walk) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
        int a = walk[i], b = walk[(i + 1) % 5];
        if (g.degree(a) != 2 && g.degree(b) != 2) pairs.emplace_back(a, b);
    }
    require(pairs.size() == 1, cfg, "no unique non-2 pair on the 5-face");
    return pairs.front();
}

}  // namespace

ReducedInstance apply_reduction(const EmbeddedGraph& g, const Configuration& cfg) {
    const auto& a = cfg.actors;
    for (int x : a)
        if (x < 0 || x >= g.n()) not_present(cfg, "actor out of range");
    FaceSet faces;  // traced lazily by the face-based tags
    auto need_faces = [&]() {
        if (faces.count() == 0 && g.m() > 0) faces = trace_faces(g);
    };

    ReducedInstance r;
    switch (cfg.tag) {
        case ConfigTag::ThreeVertex: {
            require(a.size() == 1 && g.degree(a[0]) == 3, cfg, "not a 3-vertex");
            r = delete_one(g, cfg, a[0]);
            break;
        }
        case ConfigTag::AdjacentTwoVertices: {
            require(a.size() == 2 && g.degree(a[0]) == 2 && g.degree(a[1]) == 2 &&
                        g.has_edge(a[0], a[1]),
                    cfg, "not an adjacent 2-vertex pair");
            r = delete_one(g, cfg, a[0]);
            break;
        }
        case ConfigTag::FiveFaceTwoTwoVertices: {
            require(a.size() == 5, cfg, "expected the 5-face walk");
            need_faces();
            int f = face_of_walk(g, faces, cfg, a);
            require(face_two_vertex_count(g, faces, f) >= 2, cfg, "fewer than two 2-vertices");
            auto [x, y] = five_face_pair(g, cfg, a);
            require(g.degree(x) >= 4 && g.degree(y) >= 4, cfg, "pair endpoint below degree 4");
            r = subdivide_one(g, cfg, x, y);
            break;
        }
        case ConfigTag::ThreeFaceWithTwoVertex: {
            require(a.size() == 3 && g.degree(a[0]) == 2, cfg, "leading actor is not a 2-vertex");
            need_faces();
            face_of_walk(g, faces, cfg, a);
            r = delete_one(g, cfg, a[0]);
            break;
        }
        case ConfigTag::AdjacentConvenient: {
            require(a.size() == 2 && g.has_edge(a[0], a[1]) && is_convenient(g, a[0]) &&
                        is_convenient(g, a[1]),
                    cfg, "not an adjacent convenient pair");
            r = subdivide_one(g, cfg, a[0], a[1]);
            break;
        }
        case ConfigTag::ThreeFaceBadIncidence: {
            require(a.size() == 3, cfg, "expected the 3-face walk");
            need_faces();
            face_of_walk(g, faces, cfg, a);
            require(non_convenient_six_plus_corners(g, a) <= 1, cfg,
                    "two non-convenient 6+-corners present");
            int victim = -1;
            for (int x : a)
                if (g.degree(x) == 4 && !is_convenient(g, x) && (victim == -1 || x < victim))
                    victim = x;
            require(victim != -1, cfg, "no non-convenient 4-corner to remove");
            r = delete_one(g, cfg, victim);
            break;
        }
        case ConfigTag::OverloadedKVertex: {
            require(a.size() == 1, cfg, "expected one vertex");
            int k = g.degree(a[0]);
            int loaded = 0;
            for (int u : g.rot[a[0]])
                if (g.degree(u) == 2 || is_convenient(g, u)) ++loaded;
            require(k >= 4 && k <= 7 && loaded >= 2 * k - 7, cfg, "load threshold not met");
            r = delete_one(g, cfg, a[0]);
            break;
        }
        case ConfigTag::FourFaceTwoTwoVertices: {
            require(a.size() == 4, cfg, "expected the 4-face walk");
            need_faces();
            face_of_walk(g, faces, cfg, a);
            // The two 2-vertices must sit on opposite corners; the survivor
            // pins the deleted one's neighbor colors apart.
            std::vector<int> twos;
            for (int i = 0; i < 4; ++i)
                if (g.degree(a[i]) == 2) twos.push_back(i);
            require(twos.size() == 2 && (twos[1] - twos[0]) == 2, cfg,
                    "2-vertices not on opposite corners");
            int victim = std::min(a[twos[0]], a[twos[1]]);
            r = delete_one(g, cfg, victim);
            break;
        }
        case ConfigTag::AdjacentFourVertices: {
            require(a.size() == 2 && g.has_edge(a[0], a[1]) && g.degree(a[0]) == 4 &&
                        g.degree(a[1]) == 4,
                    cfg, "not an adjacent 4-vertex pair");
            int u = a[0], v = a[1];
            std::vector<int> us, vs;
            for (int t : g.rot[u])
                if (t != v) us.push_back(t);
            for (int t : g.rot[v])
                if (t != u) vs.push_back(t);
            std::sort(us.begin(), us.end());
            std::sort(vs.begin(), vs.end());

            r.cfg = cfg;
            EmbeddedGraph base = delete_vertices(g, {u, v}, &r.oldToNew, &r.newToOld);
            std::vector<std::vector<int>> adj = base.abstract().adj;
            auto relabel = [&](int old) { return r.oldToNew[old]; };
            std::vector<std::pair<int, int>> pairs = {
                {us[0], us[1]}, {us[1], us[2]}, {us[2], us[0]},
                {vs[0], vs[1]}, {vs[1], vs[2]}, {vs[2], vs[0]}};
            for (auto [pa, pb] : pairs) {
                int x = relabel(pa), y = relabel(pb);
                // Any direct tie becomes the split path; a missing tie is
                // created split, so either way x..y gain a fresh 2-vertex.
                std::erase(adj[x], y);
                std::erase(adj[y], x);
                int fresh = static_cast<int>(adj.size());
                adj.push_back({x, y});
                adj[x].push_back(fresh);
                adj[y].push_back(fresh);
                r.newToOld.push_back(-1);
            }
            for (auto& row : adj) std::sort(row.begin(), row.end());
            r.reduced = EmbeddedGraph{adj};
            r.embeddingPreserved = false;
            break;
        }
        case ConfigTag::SpecialSixNeighbor: {
            require(a.size() == 8, cfg, "expected {v, v1..v6, vj}");
            need_faces();
            int v = a[0], vj = a[7];
            bool matched = false;
            for (const auto& al : special_alignments(g, faces, v)) {
                if (!std::equal(al.neighbors.begin(), al.neighbors.end(), a.begin() + 1))
                    continue;
                for (int j : {1, 4, 5, 6})
                    if (al.neighbors[j - 1] == vj &&
                        (is_five_two(g, vj) || is_six_four(g, vj)))
                        matched = true;
            }
            require(matched, cfg, "alignment with that offender not found");
            r = subdivide_one(g, cfg, v, vj);
            break;
        }
        case ConfigTag::FivePath: {
            require(a.size() == 5, cfg, "expected {u, v, w, x, y}");
            need_faces();
            auto fresh = find_instances(g, faces, ConfigTag::FivePath);
            require(std::any_of(fresh.begin(), fresh.end(),
                                [&](const Configuration& c) { return c.actors == a; }),
                    cfg, "path structure not found");
            r = subdivide_one(g, cfg, a[3], a[2]);
            break;
        }
    }

    r.before = measure_of(g.abstract());
    r.after = measure_of(r.reduced.abstract());
    if (!(r.after < r.before)) not_present(cfg, "measure did not decrease");
    return r;
}

}  // namespace oddchrom
