#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddchrom/graph.hpp"

namespace oddchrom {

// Charge bookkeeping in exact integer eighths: a vertex or face of degree d
// starts at 8*(d-4). The five transfer rules move 4 or 1 eighths, so every
// ledger quantity stays an exact int64.

enum class Rule { R1, R2, R3, R4, R5 };

const char* rule_name(Rule r);

struct Transfer {
    Rule rule;
    char fromKind;  // 'v' or 'f'
    int from;
    char toKind;
    int to;
    std::int64_t eighths;
    // R4 only: the giver's class, a convenient k-vertex with i 2-neighbors.
    int k = 0, i = 0;
};

struct ChargeLedger {
    std::vector<std::int64_t> vertexEighths;
    std::vector<std::int64_t> faceEighths;
    std::vector<Transfer> transfers;
    bool rulesApplied = false;

    std::int64_t total() const;
};

ChargeLedger initial_charges(const EmbeddedGraph& g, const FaceSet& faces);

// Applies R1..R5 once, in rule order, recording every transfer. Throws a
// ledger-phase error if called twice on the same ledger.
//
//   R1  5+-vertex        -> 4 eighths to each adjacent 2-vertex
//   R2  4+-face          -> 4 eighths per 2-vertex walk slot (multiplicity)
//   R3  non-convenient 6+-vertex -> 4 eighths to each distinct incident
//                                   3-face or 4-face with one 2-vertex
//   R4  convenient k-vertex with i 2-neighbors, k >= 5, i <= k-1,
//       and i = 1 when k = 5, i <= 3 when k = 6
//                        -> 1 eighth to each adjacent special 6-vertex
//   R5  6+-face          -> 1 eighth per 4+-vertex walk slot (multiplicity)
void apply_rules(const EmbeddedGraph& g, const FaceSet& faces, ChargeLedger& ledger);

struct AuditElement {
    char kind;  // 'v' or 'f'
    int id;
    int degree;
    std::int64_t initialEighths;
    std::int64_t finalEighths;
    std::string neighborhood;  // filled for negative-charge elements
};

struct AuditReport {
    int genus = 0;
    std::int64_t totalInitialEighths = 0;
    std::int64_t totalFinalEighths = 0;
    bool conservation = false;
    std::vector<AuditElement> elements;  // vertices then faces, ascending id
    std::vector<Transfer> transfers;
    std::vector<AuditElement> negatives;
};

// Full audit of one embedding: initial charges, one pass of the rules, per
// element totals, and the negative-charge elements with a description of
// their local neighborhood. Requires a connected graph (genus must exist).
AuditReport audit(const EmbeddedGraph& g);

}  // namespace oddchrom
