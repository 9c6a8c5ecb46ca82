#include <algorithm>
#include <numeric>
#include <random>

#include "gadgets_data.hpp"
#include "oddchrom/generators.hpp"

namespace oddchrom {
namespace {

// Seeds go through splitmix64 so that small user seeds (0, 1, 2, ...) land
// far apart in the mt19937_64 state space.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// rng() % k instead of uniform_int_distribution: the distribution's mapping
// is implementation-defined, and seeded runs must replay identically
// everywhere.
std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    return perm;
}

EmbeddedGraph relabel(const EmbeddedGraph& g, const std::vector<int>& perm) {
    std::vector<std::vector<int>> rot(g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto& row = rot[perm[v]];
        row.reserve(g.rot[v].size());
        for (int u : g.rot[v]) row.push_back(perm[u]);
    }
    return EmbeddedGraph{std::move(rot)};
}

EmbeddedGraph from_text(const char* text) { return parse_rotation_system(std::string(text)); }

EmbeddedGraph from_adjacency(std::vector<std::vector<int>> adj) {
    return EmbeddedGraph{std::move(adj)};
}

void erase_edge(EmbeddedGraph& g, int u, int v) {
    std::erase(g.rot[u], v);
    std::erase(g.rot[v], u);
}

// Splits one quad of a torus grid by a degree-2 corner vertex w adjacent to
// the face arc a -> b, placed so that [a b w] traces as a 3-face.
EmbeddedGraph corner_insert(std::mt19937_64& rng) {
    EmbeddedGraph g = (rng() % 2) ? torus_grid(3, 4) : torus_grid(3, 3);
    FaceSet faces = trace_faces(g);
    int f = static_cast<int>(rng() % static_cast<std::uint64_t>(faces.count()));
    std::vector<int> walk = faces.walk[f];
    int i = static_cast<int>(rng() % walk.size());
    int a = walk[i], b = walk[(i + 1) % walk.size()];
    int w = g.n();
    auto& ra = g.rot[a];
    ra.insert(std::find(ra.begin(), ra.end(), b), w);
    auto& rb = g.rot[b];
    rb.insert(std::next(std::find(rb.begin(), rb.end(), a)), w);
    g.rot.push_back({a, b});
    return g;
}

EmbeddedGraph icosahedron_variant(std::mt19937_64& rng) {
    EmbeddedGraph g = from_text(gadgets::icosahedron);
    switch (rng() % 3) {
        case 0: return g;
        case 1: {  // drop one edge: two degree-4 endpoints, still 4-connected
            auto edges = g.abstract().edges();
            auto [u, v] = edges[rng() % edges.size()];
            erase_edge(g, u, v);
            return g;
        }
        default: {  // one subdivision: a lone 2-vertex between 5-vertices
            auto edges = g.abstract().edges();
            auto [u, v] = edges[rng() % edges.size()];
            return subdivide_edge(g, u, v);
        }
    }
}

EmbeddedGraph cycle_embedded(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return EmbeddedGraph{std::move(rot)};
}

EmbeddedGraph plant_variant(ConfigTag tag, std::mt19937_64& rng) {
    switch (tag) {
        case ConfigTag::ThreeVertex:
            switch (rng() % 3) {
                case 0:  // K4
                    return from_adjacency({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
                case 1:  // triangular prism
                    return from_adjacency(
                        {{1, 2, 3}, {0, 2, 4}, {0, 1, 5}, {0, 4, 5}, {1, 3, 5}, {2, 3, 4}});
                default: {  // cube
                    std::vector<std::vector<int>> adj(8);
                    for (int i = 0; i < 8; ++i) adj[i] = {i ^ 1, i ^ 2, i ^ 4};
                    return from_adjacency(std::move(adj));
                }
            }
        case ConfigTag::AdjacentTwoVertices:
            switch (rng() % 4) {
                case 0: return from_adjacency({{1}, {0, 2}, {1, 3}, {2}});  // path on 4
                case 1: return cycle_embedded(5);
                case 2: return cycle_embedded(6);
                default: return cycle_embedded(8);
            }
        case ConfigTag::FiveFaceTwoTwoVertices: return from_text(gadgets::fivefacetwotwo);
        case ConfigTag::ThreeFaceWithTwoVertex: return corner_insert(rng);
        case ConfigTag::AdjacentConvenient: return icosahedron_variant(rng);
        case ConfigTag::ThreeFaceBadIncidence: return from_text(gadgets::badincidence);
        case ConfigTag::OverloadedKVertex: return from_text(gadgets::overloadedk);
        case ConfigTag::FourFaceTwoTwoVertices: return from_text(gadgets::fourfacetwotwo);
        case ConfigTag::AdjacentFourVertices:
            switch (rng() % 3) {
                case 0: return torus_grid(3, 3);
                case 1: return torus_grid(3, 4);
                default: return torus_grid(4, 4);
            }
        case ConfigTag::SpecialSixNeighbor: return from_text(gadgets::specialsix);
        case ConfigTag::FivePath: return from_text(gadgets::fivepath);
    }
    throw Error(ErrorKind::OutOfRange, "unknown configuration tag");
}

}  // namespace

EmbeddedGraph k7_torus() {
    std::vector<std::vector<int>> rot(7);
    for (int i = 0; i < 7; ++i)
        rot[i] = {(i + 1) % 7, (i + 3) % 7, (i + 2) % 7, (i + 6) % 7, (i + 4) % 7, (i + 5) % 7};
    return EmbeddedGraph{std::move(rot)};
}

EmbeddedGraph torus_grid(int m, int n) {
    if (m < 3 || n < 3 || m > 64 || n > 64)
        throw Error(ErrorKind::OutOfRange, "torus grid needs 3 <= m, n <= 64");
    std::vector<std::vector<int>> rot(static_cast<size_t>(m) * n);
    auto id = [n](int r, int c) { return r * n + c; };
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            rot[id(r, c)] = {id(r, (c + 1) % n), id((r + 1) % m, c), id(r, (c + n - 1) % n),
                             id((r + m - 1) % m, c)};
    return EmbeddedGraph{std::move(rot)};
}

AbstractGraph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorKind::OutOfRange, "cycle needs n >= 3");
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) adj[i] = {(i + n - 1) % n, (i + 1) % n};
    return AbstractGraph{std::move(adj)};
}

AbstractGraph complete_graph(int n) {
    if (n < 1 || n > 64) throw Error(ErrorKind::OutOfRange, "complete graph needs 1 <= n <= 64");
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i) adj[i].push_back(j);
    return AbstractGraph{std::move(adj)};
}

EmbeddedGraph random_toroidal(int n, std::uint64_t seed) {
    if (n < 9 || n > 24) throw Error(ErrorKind::OutOfRange, "random toroidal needs 9 <= n <= 24");
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (attempt + 1)));
        EmbeddedGraph g = n >= 12 ? torus_grid(3, 4) : torus_grid(3, 3);
        int deletions = static_cast<int>(rng() % 3);
        for (int d = 0; d < deletions; ++d) {
            auto edges = g.abstract().edges();
            auto [u, v] = edges[rng() % edges.size()];
            if (g.degree(u) < 3 || g.degree(v) < 3) continue;
            EmbeddedGraph trial = g;
            erase_edge(trial, u, v);
            if (is_connected(trial)) g = std::move(trial);
        }
        while (g.n() < n) {
            auto edges = g.abstract().edges();
            auto [u, v] = edges[rng() % edges.size()];
            g = subdivide_edge(g, u, v);
        }
        g = relabel(g, random_permutation(g.n(), rng));
        validate(g);
        if (is_connected(g) && euler_genus(g) <= 1 && !has_adjacent_triangles(g.abstract()))
            return g;
    }
    throw Error(ErrorKind::PlantInfeasible, "random toroidal generation kept failing the filters");
}

EmbeddedGraph plant(ConfigTag tag, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (attempt + 1)));
        try {
            EmbeddedGraph g = plant_variant(tag, rng);
            g = relabel(g, random_permutation(g.n(), rng));
            validate(g);
            auto found = find_configuration(g);
            if (found && found->tag == tag) return g;
        } catch (const Error&) {
            // fall through to the next attempt
        }
    }
    throw Error(ErrorKind::PlantInfeasible,
                std::string("could not plant configuration ") + tag_name(tag));
}

std::string GenResult::text() const {
    return embedded ? serialize_rotation_system(eg) : serialize_dimacs(ag);
}

GenResult generate(const GenSpec& spec) {
    auto need = [&](size_t k) {
        if (spec.params.size() != k)
            throw Error(ErrorKind::OutOfRange,
                        "generator '" + spec.kind + "' takes " + std::to_string(k) +
                            " parameter(s)");
    };
    auto as_int = [](long long x) {
        if (x < 0 || x > 1'000'000) throw Error(ErrorKind::OutOfRange, "parameter out of range");
        return static_cast<int>(x);
    };
    GenResult r;
    if (spec.kind == "k7-torus") {
        need(0);
        r.eg = k7_torus();
    } else if (spec.kind == "torus-grid") {
        need(2);
        r.eg = torus_grid(as_int(spec.params[0]), as_int(spec.params[1]));
    } else if (spec.kind == "cycle") {
        need(1);
        r.embedded = false;
        r.ag = cycle_graph(as_int(spec.params[0]));
    } else if (spec.kind == "complete") {
        need(1);
        r.embedded = false;
        r.ag = complete_graph(as_int(spec.params[0]));
    } else if (spec.kind == "random-toroidal") {
        need(1);
        r.eg = random_toroidal(as_int(spec.params[0]), spec.seed);
    } else if (spec.kind == "plant") {
        need(0);
        auto tag = tag_from_name(spec.tag);
        if (!tag) throw Error(ErrorKind::OutOfRange, "unknown configuration tag: " + spec.tag);
        r.eg = plant(*tag, spec.seed);
    } else {
        throw Error(ErrorKind::OutOfRange, "unknown generator kind: " + spec.kind);
    }
    return r;
}

}  // namespace oddchrom
