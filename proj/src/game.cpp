#include "nofil/game.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nofil {
namespace {

void derive(GameState& s) {
    const TripleSystem& ts = *s.ts;
    std::vector<char> played(ts.v(), 0);
    for (PointId x : s.played) played[x] = 1;
    std::vector<char> unplayable(ts.v(), 0);
    for (const auto& b : ts.blocks) {
        int np = played[b.pts[0]] + played[b.pts[1]] + played[b.pts[2]];
        if (np == 2)
            for (PointId x : b.pts)
                if (!played[x]) unplayable[x] = 1;
    }
    s.cls.assign(ts.v(), PointClass::Available);
    for (int x = 0; x < ts.v(); ++x) {
        if (played[x])
            s.cls[x] = PointClass::Played;
        else if (unplayable[x])
            s.cls[x] = PointClass::Unplayable;
    }
    s.hyperedges.clear();
    for (const auto& b : ts.blocks) {
        bool hasU = false;
        std::vector<PointId> rest;
        for (PointId x : b.pts) {
            if (unplayable[x]) hasU = true;
            if (!played[x]) rest.push_back(x);
        }
        if (hasU || rest.size() < 2) continue;
        s.hyperedges.push_back(std::move(rest));
    }
}

}  // namespace

GameState new_game(std::shared_ptr<const TripleSystem> ts) {
    GameState s;
    s.ts = std::move(ts);
    derive(s);
    return s;
}

GameState new_game(const TripleSystem& ts) {
    return new_game(std::make_shared<TripleSystem>(ts));
}

std::vector<std::string> legal_moves(const GameState& s) {
    std::vector<std::string> out;
    for (int x = 0; x < s.ts->v(); ++x)
        if (s.cls[x] == PointClass::Available) out.push_back(s.ts->points[x]);
    return out;
}

GameState play(const GameState& s, const std::string& point) {
    PointId x = s.ts->index_of(point);
    if (x < 0) throw std::invalid_argument("unknown point: " + point);
    if (s.cls[x] == PointClass::Played) throw std::invalid_argument(point + " already played");
    if (s.cls[x] == PointClass::Unplayable) {
        std::vector<char> played(s.ts->v(), 0);
        for (PointId p : s.played) played[p] = 1;
        for (const auto& b : s.ts->blocks) {
            if (!b.contains(x)) continue;
            int np = played[b.pts[0]] + played[b.pts[1]] + played[b.pts[2]];
            if (np == 2)
                throw std::invalid_argument(point + " is unplayable: block {" +
                                            s.ts->points[b.pts[0]] + "," + s.ts->points[b.pts[1]] +
                                            "," + s.ts->points[b.pts[2]] + "}");
        }
        throw std::invalid_argument(point + " is unplayable");
    }
    GameState next = s;
    next.played.push_back(x);
    derive(next);
    return next;
}

std::optional<LabeledGraph> state_graph(const GameState& s) {
    for (const auto& h : s.hyperedges)
        if (h.size() > 2) return std::nullopt;
    std::vector<std::string> verts;
    for (int x = 0; x < s.ts->v(); ++x)
        if (s.cls[x] == PointClass::Available) verts.push_back(s.ts->points[x]);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& h : s.hyperedges)
        edges.emplace_back(s.ts->points[h[0]], s.ts->points[h[1]]);
    return make_graph(verts, edges);
}

// ---------------------------------------------------------------------------
// masked full-tree machinery (v <= 62)

namespace {

struct MaskEngine {
    const TripleSystem* ts;
    int v;
    std::vector<uint64_t> block_masks;

    explicit MaskEngine(const TripleSystem& t) : ts(&t), v(t.v()) {
        if (v > 62) throw std::invalid_argument("game tree machinery capped at 62 points");
        for (const auto& b : t.blocks)
            block_masks.push_back((uint64_t(1) << b.pts[0]) | (uint64_t(1) << b.pts[1]) |
                                  (uint64_t(1) << b.pts[2]));
    }

    uint64_t full() const { return (uint64_t(1) << v) - 1; }

    uint64_t avail(uint64_t P) const {
        uint64_t U = 0;
        for (uint64_t bm : block_masks) {
            uint64_t in = bm & P;
            if (std::popcount(in) == 2) U |= bm & ~P;
        }
        return full() & ~P & ~U;
    }

    // every hyperedge of the available hypergraph has size <= 2
    bool is_graph_state(uint64_t P, uint64_t A) const {
        for (uint64_t bm : block_masks)
            if ((bm & P) == 0 && (bm & ~A) == 0) return false;
        return true;
    }

    LabeledGraph graph_of(uint64_t P, uint64_t A) const {
        std::vector<std::string> verts;
        for (int x = 0; x < v; ++x)
            if (A & (uint64_t(1) << x)) verts.push_back(ts->points[x]);
        std::vector<std::pair<std::string, std::string>> edges;
        for (size_t bi = 0; bi < block_masks.size(); ++bi) {
            uint64_t bm = block_masks[bi];
            if (std::popcount(bm & P) != 1) continue;
            uint64_t rest = bm & ~P;
            if (rest & ~A) continue;  // an unplayable point kills the block
            std::vector<std::string> e;
            for (PointId x : ts->blocks[bi].pts)
                if (!(P & (uint64_t(1) << x))) e.push_back(ts->points[x]);
            edges.emplace_back(e[0], e[1]);
        }
        return make_graph(verts, edges);
    }

    std::vector<std::string> labels_of(uint64_t mask) const {
        std::vector<std::string> out;
        for (int x = 0; x < v; ++x)
            if (mask & (uint64_t(1) << x)) out.push_back(ts->points[x]);
        return out;
    }
};

}  // namespace

Outcome outcome(const TripleSystem& ts, int solver_cap) {
    if (ts.v() > solver_cap)
        throw std::invalid_argument("outcome: v = " + std::to_string(ts.v()) +
                                    " above solver cap " + std::to_string(solver_cap));
    MaskEngine eng(ts);
    std::unordered_map<uint64_t, bool> memo;
    long states = 0;
    std::function<bool(uint64_t)> win = [&](uint64_t P) {
        auto it = memo.find(P);
        if (it != memo.end()) return it->second;
        ++states;
        uint64_t A = eng.avail(P);
        bool w = false;
        for (int x = 0; x < eng.v && !w; ++x)
            if (A & (uint64_t(1) << x))
                if (!win(P | (uint64_t(1) << x))) w = true;
        memo.emplace(P, w);
        return w;
    };
    Outcome out;
    out.winner = win(0) ? Winner::FirstPlayerWins : Winner::SecondPlayerWins;
    out.states = states;
    // winning side plays its smallest winning move, the losing side its
    // smallest legal move
    uint64_t P = 0;
    while (true) {
        uint64_t A = eng.avail(P);
        if (!A) break;
        int pick = -1;
        for (int x = 0; x < eng.v && pick < 0; ++x)
            if ((A & (uint64_t(1) << x)) && !win(P | (uint64_t(1) << x))) pick = x;
        if (pick < 0)
            for (int x = 0; x < eng.v && pick < 0; ++x)
                if (A & (uint64_t(1) << x)) pick = x;
        out.principal_variation.push_back(ts.points[pick]);
        P |= uint64_t(1) << pick;
    }
    return out;
}

void GraphCatalog::merge(const GraphCatalog& other) {
    complete = complete && other.complete;
    nodes += other.nodes;
    for (const auto& [key, entry] : other.by_key) {
        auto it = by_key.find(key);
        if (it == by_key.end()) {
            by_key.emplace(key, entry);
        } else {
            it->second.count += entry.count;
            if (entry.witness < it->second.witness) {
                it->second.witness = entry.witness;
                it->second.representative = entry.representative;
            }
        }
    }
}

namespace {

// shared visited table with atomic insert-if-absent semantics
struct VisitedTable {
    std::vector<std::atomic<uint32_t>> bits;
    explicit VisitedTable(int v) : bits((size_t(1) << v) / 32 + 1) {}
    bool claim(uint64_t P) {
        uint32_t mask = uint32_t(1) << (P & 31);
        return (bits[P >> 5].fetch_or(mask) & mask) == 0;
    }
};

struct HarvestWorker {
    const MaskEngine& eng;
    const HarvestLimits& limits;
    VisitedTable& visited;
    std::atomic<long>& nodes;
    GraphCatalog local;

    void record(uint64_t P, uint64_t A) {
        if (std::popcount(A) > limits.max_graph_vertices) return;
        LabeledGraph g = eng.graph_of(P, A);
        std::string key = canonical_form(g, limits.max_graph_vertices);
        auto witness = eng.labels_of(P);
        auto it = local.by_key.find(key);
        if (it == local.by_key.end()) {
            local.by_key.emplace(key, CatalogEntry{std::move(g), std::move(witness), 1});
        } else {
            it->second.count++;
            if (witness < it->second.witness) {
                it->second.witness = std::move(witness);
                it->second.representative = std::move(g);
            }
        }
    }

    void dfs(uint64_t P) {
        if (!visited.claim(P)) return;
        if (nodes.fetch_add(1) >= limits.max_nodes) {
            local.complete = false;
            return;
        }
        uint64_t A = eng.avail(P);
        if (eng.is_graph_state(P, A)) record(P, A);
        for (int x = 0; x < eng.v; ++x)
            if (A & (uint64_t(1) << x)) dfs(P | (uint64_t(1) << x));
    }
};

}  // namespace

GraphCatalog harvest_graphs(const TripleSystem& ts, const HarvestLimits& limits, int jobs) {
    if (ts.v() > 24)
        throw std::invalid_argument("harvest_graphs: v capped at 24 (full-tree traversal)");
    MaskEngine eng(ts);
    VisitedTable visited(ts.v());
    std::atomic<long> nodes{0};

    GraphCatalog result;
    if (jobs <= 1) {
        HarvestWorker w{eng, limits, visited, nodes, {}};
        w.dfs(0);
        result = std::move(w.local);
    } else {
        // split the first ply across workers; the shared table keeps every
        // played set counted exactly once
        visited.claim(0);
        nodes.fetch_add(1);
        uint64_t A0 = eng.avail(0);
        std::vector<int> first;
        for (int x = 0; x < eng.v; ++x)
            if (A0 & (uint64_t(1) << x)) first.push_back(x);
        std::vector<GraphCatalog> partial(first.size());
#ifdef _OPENMP
        #pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
        for (size_t i = 0; i < first.size(); ++i) {
            HarvestWorker w{eng, limits, visited, nodes, {}};
            w.dfs(uint64_t(1) << first[i]);
            partial[i] = std::move(w.local);
        }
        for (auto& p : partial) result.merge(p);
        if (eng.is_graph_state(0, A0)) {
            HarvestWorker w{eng, limits, visited, nodes, {}};
            w.record(0, A0);
            result.merge(w.local);
        }
    }
    result.nodes = nodes.load();
    if (result.nodes >= limits.max_nodes) result.complete = false;
    return result;
}

ContainsResult contains_graph(const TripleSystem& ts, const LabeledGraph& g,
                              const HarvestLimits& limits) {
    MaskEngine eng(ts);
    int cap = std::max(limits.max_graph_vertices, g.n());
    std::string target = canonical_form(g, cap);
    VisitedTable visited(ts.v());
    long nodes = 0;
    ContainsResult res;
    std::function<bool(uint64_t)> dfs = [&](uint64_t P) {
        if (!visited.claim(P)) return false;
        if (++nodes >= limits.max_nodes) {
            res.complete = false;
            return false;
        }
        uint64_t A = eng.avail(P);
        if (std::popcount(A) == g.n() && eng.is_graph_state(P, A)) {
            LabeledGraph got = eng.graph_of(P, A);
            if ((long)got.edges.size() == g.e() && canonical_form(got, cap) == target) {
                res.found = true;
                res.witness = eng.labels_of(P);
                return true;
            }
        }
        for (int x = 0; x < eng.v; ++x)
            if (A & (uint64_t(1) << x))
                if (dfs(P | (uint64_t(1) << x))) return true;
        return false;
    };
    dfs(0);
    return res;
}

std::string write_catalog(const GraphCatalog& catalog) {
    std::ostringstream out;
    for (const auto& [key, entry] : catalog.by_key) {
        out << key << " " << entry.representative.n() << " " << entry.representative.e();
        for (const auto& w : entry.witness) out << " " << w;
        out << "\n";
    }
    if (!catalog.complete) out << "# incomplete: node budget exhausted\n";
    return out.str();
}

}  // namespace nofil
