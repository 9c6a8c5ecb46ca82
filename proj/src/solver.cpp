#include "oddchrom/solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "oddchrom/errors.hpp"

namespace oddchrom {
namespace {

// Shared backtracking engine. Incremental state per vertex: color multiset of
// its colored neighbors (cnt), how many colors occur an odd number of times
// (oddCount), and how many neighbors are still uncolored. A vertex whose
// neighborhood is fully colored must have oddCount > 0; that cut fires the
// moment the last neighbor is placed, whether or not the vertex itself is.
class Search {
  public:
    Search(const AbstractGraph& g, int k, bool symmetry)
        : g_(g),
          k_(k),
          symmetry_(symmetry),
          color_(g.n(), 0),
          cnt_(g.n(), std::vector<int>(k + 1, 0)),
          oddCount_(g.n(), 0),
          uncolored_(g.n(), 0) {
        for (int v = 0; v < g_.n(); ++v) uncolored_[v] = g_.degree(v);
    }

    // Returns false when some fully surrounded vertex already lacks an odd
    // color (no completion can fix that). Improper or out-of-range fixed
    // colors are caller errors.
    bool preassign(const Coloring& partial) {
        for (int v = 0; v < g_.n(); ++v) {
            int c = partial.color[v];
            if (c == 0) continue;
            if (c < 0 || c > k_)
                throw Error(ErrorKind::ImproperPartial,
                            "vertex " + std::to_string(v) + " has color " + std::to_string(c) +
                                " outside [1, " + std::to_string(k_) + "]");
            if (cnt_[v][c] > 0)
                throw Error(ErrorKind::ImproperPartial,
                            "vertex " + std::to_string(v) + " repeats a neighbor's color");
            place(v, c);
        }
        for (int v = 0; v < g_.n(); ++v)
            if (g_.degree(v) > 0 && uncolored_[v] == 0 && oddCount_[v] == 0) return false;
        return true;
    }

    bool run() {
        order_.clear();
        for (int v = 0; v < g_.n(); ++v)
            if (color_[v] == 0) order_.push_back(v);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
            return a < b;
        });
        int maxUsed = 0;
        if (symmetry_)
            for (int v = 0; v < g_.n(); ++v) maxUsed = std::max(maxUsed, color_[v]);
        return search(0, maxUsed);
    }

    Coloring coloring() const {
        Coloring c(g_.n());
        c.color = color_;
        return c;
    }
    long long nodes() const { return nodes_; }

  private:
    void place(int v, int c) {
        color_[v] = c;
        for (int u : g_.adj[v]) {
            ++cnt_[u][c];
            oddCount_[u] += (cnt_[u][c] % 2 == 1) ? 1 : -1;
            --uncolored_[u];
        }
    }

    void unplace(int v, int c) {
        color_[v] = 0;
        for (int u : g_.adj[v]) {
            oddCount_[u] += (cnt_[u][c] % 2 == 1) ? -1 : 1;
            --cnt_[u][c];
            ++uncolored_[u];
        }
    }

    bool saturation_ok(int v) const {
        for (int u : g_.adj[v])
            if (uncolored_[u] == 0 && oddCount_[u] == 0) return false;
        return true;
    }

    bool search(int idx, int maxUsed) {
        if (idx == static_cast<int>(order_.size())) return true;
        int v = order_[idx];
        int lim = symmetry_ ? std::min(k_, maxUsed + 1) : k_;
        for (int c = 1; c <= lim; ++c) {
            if (cnt_[v][c] > 0) continue;
            ++nodes_;
            place(v, c);
            if (saturation_ok(v) && search(idx + 1, std::max(maxUsed, c))) return true;
            unplace(v, c);
        }
        return false;
    }

    const AbstractGraph& g_;
    int k_;
    bool symmetry_;
    std::vector<int> color_;
    std::vector<std::vector<int>> cnt_;
    std::vector<int> oddCount_;
    std::vector<int> uncolored_;
    std::vector<int> order_;
    long long nodes_ = 0;
};

bool next_assignment(std::vector<int>& a, int k) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] < k) {
            ++a[i];
            std::fill(a.begin() + i + 1, a.end(), 1);
            return true;
        }
    }
    return false;
}

}  // namespace

SolveResult brute_force_chi_odd(const AbstractGraph& g, int kmax) {
    validate(g);
    if (g.n() > 10)
        throw Error(ErrorKind::SizeGuard,
                    "brute force is capped at 10 vertices, got " + std::to_string(g.n()));
    if (g.n() == 0) return {0, Coloring(0), 0};
    SolveResult result;
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> a(g.n(), 1);
        Coloring c(g.n());
        do {
            ++result.nodes;
            c.color = a;
            if (verify_odd_coloring(g, c, k)) {
                result.chi = k;
                result.coloring = c;
                return result;
            }
        } while (next_assignment(a, k));
    }
    return result;
}

SolveResult exact_chi_odd(const AbstractGraph& g, int kmax) {
    validate(g);
    if (g.n() == 0) return {0, Coloring(0), 0};
    SolveResult result;
    for (int k = 1; k <= kmax; ++k) {
        Search s(g, k, /*symmetry=*/true);
        bool found = s.run();
        result.nodes += s.nodes();
        if (found) {
            result.chi = k;
            result.coloring = s.coloring();
            assert(verify_odd_coloring(g, result.coloring, k));
            return result;
        }
    }
    return result;
}

std::optional<Coloring> solve_exact_k(const AbstractGraph& g, int k, long long* nodes) {
    validate(g);
    Search s(g, k, /*symmetry=*/true);
    bool found = s.run();
    if (nodes) *nodes = s.nodes();
    if (!found) return std::nullopt;
    Coloring c = s.coloring();
    assert(verify_odd_coloring(g, c, k));
    return c;
}

std::optional<Coloring> extend_partial(const AbstractGraph& g, const Coloring& partial, int k,
                                       long long* nodes) {
    validate(g);
    if (partial.n() != g.n()) throw Error(ErrorKind::OutOfRange, "partial coloring size mismatch");
    Search s(g, k, /*symmetry=*/false);
    bool feasible = s.preassign(partial);
    bool found = feasible && s.run();
    if (nodes) *nodes = s.nodes();
    if (!found) return std::nullopt;
    Coloring c = s.coloring();
    assert(verify_odd_coloring(g, c, k));
    return c;
}

}  // namespace oddchrom
