#include "oddchrom/graph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace oddchrom {

int AbstractGraph::m() const {
    int total = 0;
    for (const auto& a : adj) total += static_cast<int>(a.size());
    return total / 2;
}

bool AbstractGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> AbstractGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int EmbeddedGraph::m() const {
    int total = 0;
    for (const auto& r : rot) total += static_cast<int>(r.size());
    return total / 2;
}

bool EmbeddedGraph::has_edge(int u, int v) const { return rot_index(u, v) >= 0; }

int EmbeddedGraph::rot_index(int v, int u) const {
    const auto& r = rot[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == u) return i;
    return -1;
}

int EmbeddedGraph::rot_succ(int v, int u) const {
    int i = rot_index(v, u);
    if (i < 0) throw Error(ErrorKind::NonEdge, "no edge " + std::to_string(v) + "-" + std::to_string(u));
    return rot[v][(i + 1) % rot[v].size()];
}

AbstractGraph EmbeddedGraph::abstract() const {
    AbstractGraph g;
    g.adj = rot;
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::vector<std::pair<int, int>> EmbeddedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v : rot[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void validate_lists(const std::vector<std::vector<int>>& lists) {
    int n = static_cast<int>(lists.size());
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (int u : lists[v]) {
            if (u < 0 || u >= n)
                throw Error(ErrorKind::OutOfRange,
                            "vertex " + std::to_string(u) + " out of range at " + std::to_string(v));
            if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(v));
            if (!seen.insert(u).second)
                throw Error(ErrorKind::DuplicateNeighbor,
                            "duplicate neighbor " + std::to_string(u) + " at " + std::to_string(v));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int u : lists[v])
            if (std::find(lists[u].begin(), lists[u].end(), v) == lists[u].end())
                throw Error(ErrorKind::AsymmetricAdjacency,
                            std::to_string(v) + " lists " + std::to_string(u) + " but not conversely");
}

}  // namespace

void validate(const AbstractGraph& g) { validate_lists(g.adj); }
void validate(const EmbeddedGraph& g) { validate_lists(g.rot); }

int FaceSet::at(int u, int v) const {
    auto it = face_of.find({u, v});
    if (it == face_of.end())
        throw Error(ErrorKind::NonEdge, "no directed edge " + std::to_string(u) + "->" + std::to_string(v));
    return it->second;
}

FaceSet trace_faces(const EmbeddedGraph& g) {
    FaceSet fs;
    // Directed edges in lexicographic order; each belongs to exactly one face.
    for (int u = 0; u < g.n(); ++u) {
        std::vector<int> nbrs = g.rot[u];
        std::sort(nbrs.begin(), nbrs.end());
        for (int v : nbrs) {
            if (fs.face_of.count({u, v})) continue;
            int f = fs.count();
            std::vector<int> walk;
            int a = u, b = v;
            do {
                fs.face_of[{a, b}] = f;
                walk.push_back(a);
                int c = g.rot_succ(b, a);
                a = b;
                b = c;
            } while (!(a == u && b == v));
            fs.walk.push_back(std::move(walk));
        }
    }
    return fs;
}

namespace {

bool connected_lists(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

}  // namespace

bool is_connected(const AbstractGraph& g) { return connected_lists(g.adj); }
bool is_connected(const EmbeddedGraph& g) { return connected_lists(g.rot); }

int euler_genus(const EmbeddedGraph& g) { return euler_genus(g, trace_faces(g)); }

int euler_genus(const EmbeddedGraph& g, const FaceSet& faces) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "euler_genus needs a connected graph");
    if (g.m() == 0) return 0;  // point or empty: tracing yields no walks, formula degenerates
    int chi = g.n() - g.m() + faces.count();
    assert((2 - chi) % 2 == 0);
    return (2 - chi) / 2;
}

bool has_adjacent_triangles(const AbstractGraph& g) {
    // Count, per edge (u, v), the common neighbors of u and v.
    for (int u = 0; u < g.n(); ++u) {
        for (int v : g.adj[u]) {
            if (v < u) continue;
            int common = 0;
            for (int w : g.adj[u])
                if (w != v && g.has_edge(v, w)) ++common;
            if (common >= 2) return true;
        }
    }
    return false;
}

int two_neighbor_count(const EmbeddedGraph& g, int v) {
    int c = 0;
    for (int u : g.rot[v])
        if (g.degree(u) == 2) ++c;
    return c;
}

bool is_convenient(const EmbeddedGraph& g, int v) {
    int d = g.degree(v);
    return d >= 4 && (d % 2 == 1 || two_neighbor_count(g, v) >= 1);
}

int face_two_vertex_count(const EmbeddedGraph& g, const FaceSet& faces, int f) {
    std::set<int> twos;
    for (int x : faces.walk[f])
        if (g.degree(x) == 2) twos.insert(x);
    return static_cast<int>(twos.size());
}

bool is_four_one_face(const EmbeddedGraph& g, const FaceSet& faces, int f) {
    return faces.deg(f) == 4 && face_two_vertex_count(g, faces, f) == 1;
}

std::vector<SpecialAlignment> special_alignments(const EmbeddedGraph& g,
                                                 const FaceSet& faces, int v) {
    std::vector<SpecialAlignment> out;
    if (g.degree(v) != 6 || is_convenient(g, v)) return out;
    const auto& r = g.rot[v];
    // Face between consecutive neighbors a, b of v (b following a in the
    // rotation) is the face holding the corner a-v-b, i.e. the face of the
    // directed edge v->b. A reflected reading reverses the neighbor cycle;
    // then b precedes a in rot[v] and the corner face is that of v->a.
    for (int rev = 0; rev < 2; ++rev) {
        std::vector<int> nb(6), fb(6);
        for (int i = 0; i < 6; ++i) nb[i] = rev ? r[(6 - i) % 6] : r[i];
        for (int i = 0; i < 6; ++i) {
            int a = nb[i], b = nb[(i + 1) % 6];
            fb[i] = rev ? faces.at(v, a) : faces.at(v, b);
            (void)a;
        }
        for (int off = 0; off < 6; ++off) {
            // f1 = face between v1, v2; pattern (3, *, 3, 41, 41, 41).
            int f1 = fb[off], f3 = fb[(off + 2) % 6];
            if (faces.deg(f1) != 3 || faces.deg(f3) != 3) continue;
            bool ok = true;
            for (int j = 3; j < 6; ++j)
                if (!is_four_one_face(g, faces, fb[(off + j) % 6])) ok = false;
            if (!ok) continue;
            SpecialAlignment al;
            al.neighbors.resize(6);
            for (int i = 0; i < 6; ++i) al.neighbors[i] = nb[(off + i) % 6];
            out.push_back(std::move(al));
        }
    }
    return out;
}

bool is_special_six(const EmbeddedGraph& g, const FaceSet& faces, int v) {
    return !special_alignments(g, faces, v).empty();
}

EmbeddedGraph subdivide_edge(const EmbeddedGraph& g, int u, int v) {
    int iu = g.rot_index(u, v), iv = g.rot_index(v, u);
    if (iu < 0 || iv < 0)
        throw Error(ErrorKind::NonEdge, "cannot subdivide missing edge " + std::to_string(u) + "-" + std::to_string(v));
    EmbeddedGraph h = g;
    int w = g.n();
    h.rot[u][iu] = w;
    h.rot[v][iv] = w;
    h.rot.push_back({u, v});
    return h;
}

EmbeddedGraph delete_vertices(const EmbeddedGraph& g, const std::vector<int>& del,
                              std::vector<int>* old_to_new, std::vector<int>* new_to_old) {
    std::vector<char> gone(g.n(), 0);
    for (int v : del) gone[v] = 1;
    std::vector<int> o2n(g.n(), -1), n2o;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) {
            o2n[v] = static_cast<int>(n2o.size());
            n2o.push_back(v);
        }
    EmbeddedGraph h;
    h.rot.resize(n2o.size());
    for (int v = 0; v < g.n(); ++v) {
        if (gone[v]) continue;
        for (int u : g.rot[v])
            if (!gone[u]) h.rot[o2n[v]].push_back(o2n[u]);
    }
    if (old_to_new) *old_to_new = std::move(o2n);
    if (new_to_old) *new_to_old = std::move(n2o);
    return h;
}

// ---- serialization ----

namespace {

// Strips comments ('#' or standalone 'c' lines) and splits into tokens.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string t;
        bool first = true;
        while (ls >> t) {
            if (first && t == "c") break;  // DIMACS comment line
            first = false;
            toks.push_back(t);
        }
    }
    return toks;
}

int to_int(const std::string& t, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::SyntaxError, std::string("expected ") + what + ", got '" + t + "'");
    }
}

}  // namespace

EmbeddedGraph parse_rotation_system(std::istream& in) {
    auto toks = tokenize(in);
    size_t i = 0;
    auto need = [&](const char* what) -> const std::string& {
        if (i >= toks.size()) throw Error(ErrorKind::SyntaxError, std::string("unexpected end of input, expected ") + what);
        return toks[i++];
    };
    if (need("'V'") != "V") throw Error(ErrorKind::SyntaxError, "rotation input must start with 'V <n>'");
    int n = to_int(need("vertex count"), "vertex count");
    if (n < 0) throw Error(ErrorKind::SyntaxError, "negative vertex count");
    EmbeddedGraph g;
    g.rot.resize(n);
    std::vector<char> seen(n, 0);
    while (i < toks.size()) {
        if (need("'R'") != "R") throw Error(ErrorKind::SyntaxError, "expected 'R <v>: ...' line");
        std::string vt = need("vertex");
        // accept both "R v:" and "R v :"
        bool colon_attached = !vt.empty() && vt.back() == ':';
        if (colon_attached) vt.pop_back();
        int v = to_int(vt, "vertex");
        if (v < 0 || v >= n) throw Error(ErrorKind::OutOfRange, "rotation line for vertex " + std::to_string(v));
        if (!colon_attached && need("':'") != ":") throw Error(ErrorKind::SyntaxError, "expected ':' after vertex");
        if (seen[v]) throw Error(ErrorKind::SyntaxError, "repeated rotation line for vertex " + std::to_string(v));
        seen[v] = 1;
        while (i < toks.size() && toks[i] != "R") g.rot[v].push_back(to_int(toks[i++], "neighbor"));
    }
    validate(g);
    return g;
}

EmbeddedGraph parse_rotation_system(const std::string& text) {
    std::istringstream in(text);
    return parse_rotation_system(in);
}

std::string serialize_rotation_system(const EmbeddedGraph& g) {
    std::ostringstream out;
    out << "V " << g.n() << "\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "R " << v << ":";
        for (int u : g.rot[v]) out << " " << u;
        out << "\n";
    }
    return out.str();
}

AbstractGraph parse_dimacs(std::istream& in) {
    auto toks = tokenize(in);
    size_t i = 0;
    auto need = [&](const char* what) -> const std::string& {
        if (i >= toks.size()) throw Error(ErrorKind::SyntaxError, std::string("unexpected end of input, expected ") + what);
        return toks[i++];
    };
    if (need("'p'") != "p" || need("'edge'") != "edge")
        throw Error(ErrorKind::SyntaxError, "expected 'p edge <n> <m>' header");
    int n = to_int(need("vertex count"), "vertex count");
    int m = to_int(need("edge count"), "edge count");
    if (n < 0 || m < 0) throw Error(ErrorKind::SyntaxError, "negative size in header");
    AbstractGraph g;
    g.adj.resize(n);
    int edges = 0;
    while (i < toks.size()) {
        if (need("'e'") != "e") throw Error(ErrorKind::SyntaxError, "expected 'e <u> <v>' line");
        int u = to_int(need("endpoint"), "endpoint") - 1;
        int v = to_int(need("endpoint"), "endpoint") - 1;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::OutOfRange, "edge endpoint out of range");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
        ++edges;
    }
    if (edges != m)
        throw Error(ErrorKind::SyntaxError, "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges));
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    validate(g);
    return g;
}

AbstractGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string serialize_dimacs(const AbstractGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

EmbeddedGraph parse_graph(const std::string& text) {
    std::istringstream probe(text);
    auto toks = tokenize(probe);
    if (toks.empty()) throw Error(ErrorKind::SyntaxError, "empty graph input");
    if (toks[0] == "V") return parse_rotation_system(text);
    if (toks[0] == "p") {
        std::istringstream in(text);
        AbstractGraph a = parse_dimacs(in);
        EmbeddedGraph g;
        g.rot = a.adj;
        return g;
    }
    throw Error(ErrorKind::SyntaxError, "unrecognized graph format (expected 'V' or 'p')");
}

}  // namespace oddchrom
