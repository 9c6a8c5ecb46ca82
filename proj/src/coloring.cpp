#include "oddchrom/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "oddchrom/errors.hpp"

namespace oddchrom {

bool Coloring::complete() const {
    return std::all_of(color.begin(), color.end(), [](int c) { return c > 0; });
}

std::vector<int> odd_color_set(const AbstractGraph& g, const Coloring& c, int v) {
    std::map<int, int> mult;
    for (int u : g.adj[v])
        if (c.color[u] > 0) ++mult[c.color[u]];
    std::vector<int> odd;
    for (auto [col, cnt] : mult)
        if (cnt % 2 == 1) odd.push_back(col);
    return odd;
}

int odd_witness(const AbstractGraph& g, const Coloring& c, int v) {
    auto odd = odd_color_set(g, c, v);
    return odd.empty() ? 0 : odd.front();
}

bool verify_odd_coloring(const AbstractGraph& g, const Coloring& c, int k,
                         std::vector<ColoringViolation>* violations) {
    if (c.n() != g.n()) throw Error(ErrorKind::OutOfRange, "coloring size mismatch");
    bool ok = true;
    auto report = [&](ColoringViolation viol) {
        ok = false;
        if (violations) violations->push_back(viol);
    };
    for (int v = 0; v < g.n(); ++v) {
        if (c.color[v] == 0)
            report({ColoringViolation::Uncolored, v, -1});
        else if (c.color[v] < 0 || c.color[v] > k)
            report({ColoringViolation::ColorOutOfRange, v, -1});
        if (!ok && !violations) return false;
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.adj[u])
            if (u < v && c.color[u] != 0 && c.color[u] == c.color[v]) {
                report({ColoringViolation::Improper, u, v});
                if (!violations) return false;
            }
    if (!violations) {
        // Fast path: every color is known to lie in [1, k] by now.
        std::vector<int> mult(k + 1, 0);
        for (int v = 0; v < g.n(); ++v) {
            if (g.adj[v].empty()) continue;
            for (int u : g.adj[v]) ++mult[c.color[u]];
            bool oddSeen = false;
            for (int u : g.adj[v]) {
                if (mult[c.color[u]] % 2 == 1) oddSeen = true;
                mult[c.color[u]] = 0;
            }
            if (!oddSeen) return false;
        }
        return ok;
    }
    for (int v = 0; v < g.n(); ++v)
        if (!g.adj[v].empty() && odd_color_set(g, c, v).empty())
            report({ColoringViolation::NoOddColor, v, -1});
    return ok;
}

bool verify_odd_coloring(const EmbeddedGraph& g, const Coloring& c, int k,
                         std::vector<ColoringViolation>* violations) {
    return verify_odd_coloring(g.abstract(), c, k, violations);
}

int recolor_two_neighbor(const EmbeddedGraph& g, Coloring& c, int v, int k) {
    AbstractGraph a = g.abstract();
    if (!is_convenient(g, v))
        throw Error(ErrorKind::NotConvenient, "vertex " + std::to_string(v));
    if (odd_witness(a, c, v) != 0) return -1;

    int w = -1;
    for (int u : g.rot[v])
        if (g.degree(u) == 2 && (w == -1 || u < w)) w = u;
    if (w == -1)
        throw Error(ErrorKind::NotConvenient,
                    "vertex " + std::to_string(v) + " has no 2-neighbor to recolor");
    int other = g.rot[w][0] == v ? g.rot[w][1] : g.rot[w][0];

    // New color for w must keep w proper, hand v a color of odd multiplicity,
    // and not erase the last odd color at the far endpoint.
    std::set<int> avoid = {c.color[v], c.color[other]};
    auto odd_minus_w = [&](int x) {
        std::map<int, int> mult;
        for (int u : g.rot[x])
            if (u != w && c.color[u] > 0) ++mult[c.color[u]];
        for (auto [col, cnt] : mult)
            if (cnt % 2 == 1) return col;
        return 0;
    };
    if (int m = odd_minus_w(v); m != 0) avoid.insert(m);
    if (int m = odd_minus_w(other); m != 0) avoid.insert(m);

    for (int col = 1; col <= k; ++col) {
        if (avoid.count(col)) continue;
        c.color[w] = col;
        return w;
    }
    throw Error(ErrorKind::PaletteExhausted,
                "recoloring 2-neighbor " + std::to_string(w) + " of " + std::to_string(v));
}

Coloring parse_coloring(std::istream& in, int n) {
    Coloring c(n);
    std::vector<bool> seen(n, false);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        int v, col;
        if (!(ls >> v)) {
            ls.clear();
            std::string junk;
            if (ls >> junk)
                throw Error(ErrorKind::SyntaxError,
                            "line " + std::to_string(lineno) + ": expected a vertex id, got '" + junk + "'");
            continue;  // blank
        }
        if (!(ls >> col))
            throw Error(ErrorKind::SyntaxError, "line " + std::to_string(lineno) + ": expected '<vertex> <color>'");
        std::string extra;
        if (ls >> extra)
            throw Error(ErrorKind::SyntaxError, "line " + std::to_string(lineno) + ": trailing tokens");
        if (v < 0 || v >= n)
            throw Error(ErrorKind::OutOfRange, "line " + std::to_string(lineno) + ": vertex " + std::to_string(v));
        if (col < 1)
            throw Error(ErrorKind::SyntaxError, "line " + std::to_string(lineno) + ": colors are positive");
        if (seen[v])
            throw Error(ErrorKind::SyntaxError, "line " + std::to_string(lineno) + ": vertex " + std::to_string(v) + " assigned twice");
        seen[v] = true;
        c.color[v] = col;
    }
    return c;
}

Coloring parse_coloring(const std::string& text, int n) {
    std::istringstream in(text);
    return parse_coloring(in, n);
}

std::string serialize_coloring(const Coloring& c) {
    std::ostringstream out;
    for (int v = 0; v < c.n(); ++v)
        if (c.color[v] > 0) out << v << ' ' << c.color[v] << '\n';
    return out.str();
}

}  // namespace oddchrom
