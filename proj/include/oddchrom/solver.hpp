#pragma once

#include <optional>

#include "oddchrom/coloring.hpp"
#include "oddchrom/graph.hpp"

namespace oddchrom {

struct SolveResult {
    int chi = -1;         // smallest palette size that admits an odd coloring; -1 if none within kmax
    Coloring coloring;    // a witness coloring when chi > 0
    long long nodes = 0;  // color assignments tried
};

// Exhaustive check of every assignment in [1..k]^n for k = 1..kmax.
// Deliberately unclever; the reference oracle. Throws SizeGuard for n > 10.
SolveResult brute_force_chi_odd(const AbstractGraph& g, int kmax = 8);

// Backtracking search: vertices in degree-descending order, pruning on
// properness and on vertices whose neighborhood just became fully colored
// without a color of odd multiplicity.
SolveResult exact_chi_odd(const AbstractGraph& g, int kmax = 8);

// Decision variant at a fixed palette size: some odd k-coloring, or nullopt.
// Skips the chi minimization loop, so cheap even when k-1 would be hard to
// refute.
std::optional<Coloring> solve_exact_k(const AbstractGraph& g, int k, long long* nodes = nullptr);

// Completes a partial coloring (0 = free vertex) into an odd coloring with
// colors in [1, k], or returns nullopt when none exists. Throws
// ImproperPartial if the fixed part is already improper or out of range.
std::optional<Coloring> extend_partial(const AbstractGraph& g, const Coloring& partial,
                                       int k, long long* nodes = nullptr);

}  // namespace oddchrom
