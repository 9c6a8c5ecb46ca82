#include <algorithm>
#include <set>
#include <sstream>

#include "oddchrom/discharging.hpp"

namespace oddchrom {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
        case Rule::R4: return "R4";
        case Rule::R5: return "R5";
    }
    return "?";
}

std::int64_t ChargeLedger::total() const {
    std::int64_t t = 0;
    for (auto x : vertexEighths) t += x;
    for (auto x : faceEighths) t += x;
    return t;
}

ChargeLedger initial_charges(const EmbeddedGraph& g, const FaceSet& faces) {
    ChargeLedger ledger;
    ledger.vertexEighths.resize(g.n());
    for (int v = 0; v < g.n(); ++v)
        ledger.vertexEighths[v] = 8 * (static_cast<std::int64_t>(g.degree(v)) - 4);
    ledger.faceEighths.resize(faces.count());
    for (int f = 0; f < faces.count(); ++f)
        ledger.faceEighths[f] = 8 * (static_cast<std::int64_t>(faces.deg(f)) - 4);
    return ledger;
}

namespace {

std::vector<int> sorted_neighbors(const EmbeddedGraph& g, int v) {
    std::vector<int> nb = g.rot[v];
    std::sort(nb.begin(), nb.end());
    return nb;
}

// Every face touching v, via its corners; each incident face once.
std::set<int> incident_faces(const EmbeddedGraph& g, const FaceSet& faces, int v) {
    std::set<int> out;
    for (int u : g.rot[v]) {
        out.insert(faces.at(v, u));
        out.insert(faces.at(u, v));
    }
    return out;
}

bool r4_gives(const EmbeddedGraph& g, int v) {
    int k = g.degree(v);
    if (k < 5 || !is_convenient(g, v)) return false;
    int i = two_neighbor_count(g, v);
    if (i > k - 1) return false;
    if (k == 5 && i != 1) return false;
    if (k == 6 && i > 3) return false;
    return true;
}

}  // namespace

void apply_rules(const EmbeddedGraph& g, const FaceSet& faces, ChargeLedger& ledger) {
    if (ledger.rulesApplied)
        throw Error(ErrorKind::LedgerPhase, "discharging rules already applied to this ledger");
    ledger.rulesApplied = true;

    auto move = [&](Rule rule, char fk, int from, char tk, int to, std::int64_t amount, int k = 0,
                    int i = 0) {
        (fk == 'v' ? ledger.vertexEighths[from] : ledger.faceEighths[from]) -= amount;
        (tk == 'v' ? ledger.vertexEighths[to] : ledger.faceEighths[to]) += amount;
        ledger.transfers.push_back({rule, fk, from, tk, to, amount, k, i});
    };

    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 5) continue;
        for (int u : sorted_neighbors(g, v))
            if (g.degree(u) == 2) move(Rule::R1, 'v', v, 'v', u, 4);
    }

    for (int f = 0; f < faces.count(); ++f) {
        if (faces.deg(f) < 4) continue;
        for (int x : faces.walk[f])
            if (g.degree(x) == 2) move(Rule::R2, 'f', f, 'v', x, 4);
    }

    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 6 || is_convenient(g, v)) continue;
        for (int f : incident_faces(g, faces, v))
            if (faces.deg(f) == 3 || is_four_one_face(g, faces, f))
                move(Rule::R3, 'v', v, 'f', f, 4);
    }

    for (int v = 0; v < g.n(); ++v) {
        if (!r4_gives(g, v)) continue;
        int k = g.degree(v), i = two_neighbor_count(g, v);
        for (int u : sorted_neighbors(g, v))
            if (is_special_six(g, faces, u)) move(Rule::R4, 'v', v, 'v', u, 1, k, i);
    }

    for (int f = 0; f < faces.count(); ++f) {
        if (faces.deg(f) < 6) continue;
        for (int x : faces.walk[f])
            if (g.degree(x) >= 4) move(Rule::R5, 'f', f, 'v', x, 1);
    }
}

namespace {

std::string vertex_neighborhood(const EmbeddedGraph& g, int v) {
    std::ostringstream os;
    os << "neighbors:";
    for (int u : g.rot[v]) os << ' ' << u << "(d" << g.degree(u) << ')';
    return os.str();
}

std::string face_neighborhood(const EmbeddedGraph& g, const FaceSet& faces, int f) {
    std::ostringstream os;
    os << "walk:";
    for (int x : faces.walk[f]) os << ' ' << x << "(d" << g.degree(x) << ')';
    return os.str();
}

}  // namespace

AuditReport audit(const EmbeddedGraph& g) {
    validate(g);
    AuditReport report;
    report.genus = euler_genus(g);
    FaceSet faces = trace_faces(g);
    ChargeLedger ledger = initial_charges(g, faces);
    std::vector<std::int64_t> initialV = ledger.vertexEighths;
    std::vector<std::int64_t> initialF = ledger.faceEighths;
    report.totalInitialEighths = ledger.total();
    apply_rules(g, faces, ledger);
    report.totalFinalEighths = ledger.total();
    report.conservation = report.totalInitialEighths == report.totalFinalEighths;
    report.transfers = ledger.transfers;

    for (int v = 0; v < g.n(); ++v)
        report.elements.push_back(
            {'v', v, g.degree(v), initialV[v], ledger.vertexEighths[v], ""});
    for (int f = 0; f < faces.count(); ++f)
        report.elements.push_back(
            {'f', f, faces.deg(f), initialF[f], ledger.faceEighths[f], ""});
    for (AuditElement e : report.elements)
        if (e.finalEighths < 0) {
            e.neighborhood = e.kind == 'v' ? vertex_neighborhood(g, e.id)
                                           : face_neighborhood(g, faces, e.id);
            report.negatives.push_back(e);
        }
    return report;
}

}  // namespace oddchrom
