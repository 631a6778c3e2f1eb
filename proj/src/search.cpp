#include "nofil/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nofil {
namespace {

using Clock = std::chrono::steady_clock;

// classic Stinson step: cover an uncovered pair with a random third point,
// evicting the at most two blocks it collides with; frozen blocks are immune
// and force a redraw
struct Climb {
    int v;
    std::mt19937_64 rng;
    std::vector<int> cover;            // pair -> block id or -1
    std::vector<std::array<int, 3>> blocks;
    std::vector<char> frozen;
    std::vector<std::pair<int, int>> uncovered;  // with lazy deletion
    long live_blocks = 0;

    int& at(int x, int y) { return cover[x * v + y]; }

    explicit Climb(int v_, uint64_t seed) : v(v_), rng(seed), cover(size_t(v_) * v_, -1) {}

    bool add_frozen(const std::array<int, 3>& b) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (at(b[i], b[j]) >= 0) return false;
        place(b, true);
        return true;
    }

    void place(const std::array<int, 3>& b, bool is_frozen) {
        int id = (int)blocks.size();
        blocks.push_back(b);
        frozen.push_back(is_frozen);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) at(b[i], b[j]) = at(b[j], b[i]) = id;
        ++live_blocks;
    }

    void remove(int id) {
        const auto& b = blocks[id];
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                at(b[i], b[j]) = at(b[j], b[i]) = -1;
                uncovered.push_back({std::min(b[i], b[j]), std::max(b[i], b[j])});
            }
        blocks[id] = {-1, -1, -1};
        --live_blocks;
    }

    void seed_uncovered() {
        for (int x = 0; x < v; ++x)
            for (int y = x + 1; y < v; ++y)
                if (at(x, y) < 0) uncovered.push_back({x, y});
    }

    std::optional<std::pair<int, int>> pick_uncovered() {
        while (!uncovered.empty()) {
            size_t i = rng() % uncovered.size();
            auto pr = uncovered[i];
            if (at(pr.first, pr.second) < 0) return pr;
            uncovered[i] = uncovered.back();
            uncovered.pop_back();
        }
        return std::nullopt;
    }

    bool run(long max_iterations) {
        const long want = long(v) * (v - 1) / 6;
        seed_uncovered();
        std::vector<int> zs;
        for (long it = 0; it < max_iterations; ++it) {
            if (live_blocks == want) return true;
            auto pr = pick_uncovered();
            if (!pr) return live_blocks == want;
            auto [x, y] = *pr;
            // {x,z} must also be uncovered, so adding {x,y,z} evicts at most
            // the one block covering {y,z}; uncovered degrees are even, so a
            // second partner of x always exists
            zs.clear();
            for (int z = 0; z < v; ++z) {
                if (z == x || z == y || at(x, z) >= 0) continue;
                int byz = at(y, z);
                if (byz >= 0 && frozen[byz]) continue;
                zs.push_back(z);
            }
            if (zs.empty()) continue;
            int z = zs[rng() % zs.size()];
            int byz = at(y, z);
            if (byz >= 0) remove(byz);
            place({x, y, z}, false);
        }
        return live_blocks == want;
    }

    std::vector<std::array<int, 3>> result() const {
        std::vector<std::array<int, 3>> out;
        for (size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i][0] >= 0) out.push_back(blocks[i]);
        return out;
    }
};

TripleSystem to_system(const std::vector<std::string>& labels,
                       const std::vector<std::array<int, 3>>& blocks) {
    std::vector<std::array<std::string, 3>> bl;
    bl.reserve(blocks.size());
    for (const auto& b : blocks) bl.push_back({labels[b[0]], labels[b[1]], labels[b[2]]});
    return make_triple_system(labels, bl);
}

std::vector<std::string> numeric_labels(int v) {
    std::vector<std::string> out;
    for (int i = 0; i < v; ++i) out.push_back(std::to_string(i));
    return out;
}

}  // namespace

std::optional<TripleSystem> hillclimb_sts(int v, const SearchConfig& cfg) {
    if (v % 6 != 1 && v % 6 != 3)
        throw std::invalid_argument("hillclimb_sts: v = 1,3 (mod 6) required");
    // geometric restart policy: the budget doubles every 4 failed restarts
    long budget = std::max<long>(1000, 40L * v * v);
    for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
        Climb climb(v, cfg.seed * 1000003ULL + r);
        if (climb.run(std::min(budget, cfg.max_iterations))) {
            TripleSystem ts = to_system(numeric_labels(v), climb.result());
            if (validate_sts(ts).ok) return ts;
        }
        if (r % 4 == 3) budget = std::min(budget * 2, cfg.max_iterations);
    }
    return std::nullopt;
}

std::vector<std::vector<std::pair<int, int>>> equitable_edge_colouring(const LabeledGraph& g,
                                                                       int k) {
    if (k < 1) throw std::invalid_argument("equitable_edge_colouring: k >= 1 required");
    auto classes_opt = edge_colouring(g, k);
    if (!classes_opt)
        throw std::invalid_argument("equitable_edge_colouring: k below the chromatic index");
    auto classes = *classes_opt;

    // rebalance by alternating-path swaps until sizes differ by at most one
    auto sizes_ok = [&] {
        size_t lo = g.edges.size(), hi = 0;
        for (const auto& c : classes) {
            lo = std::min(lo, c.size());
            hi = std::max(hi, c.size());
        }
        return hi <= lo + 1;
    };
    int guard = 0;
    while (!sizes_ok() && guard++ < 10000) {
        size_t hi = 0, lo = 0;
        for (size_t i = 1; i < classes.size(); ++i) {
            if (classes[i].size() > classes[hi].size()) hi = i;
            if (classes[i].size() < classes[lo].size()) lo = i;
        }
        // Kempe components of classes hi and lo: swap one with more hi-edges
        std::vector<int> colour_of(g.n(), -1);  // vertex -> component id
        // build adjacency within the two classes
        std::vector<std::vector<std::pair<int, int>>> adj(g.n());  // (other, class)
        for (auto [a, b] : classes[hi]) {
            adj[a].push_back({b, 0});
            adj[b].push_back({a, 0});
        }
        for (auto [a, b] : classes[lo]) {
            adj[a].push_back({b, 1});
            adj[b].push_back({a, 1});
        }
        int comp = 0;
        std::vector<int> comp_of(g.n(), -1);
        for (int s = 0; s < g.n(); ++s) {
            if (comp_of[s] >= 0 || adj[s].empty()) continue;
            std::vector<int> stack{s};
            comp_of[s] = comp;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [y, _] : adj[x])
                    if (comp_of[y] < 0) {
                        comp_of[y] = comp;
                        stack.push_back(y);
                    }
            }
            ++comp;
        }
        // count edges per component per class
        std::vector<std::pair<int, int>> tally(comp, {0, 0});
        for (auto [a, b] : classes[hi]) tally[comp_of[a]].first++;
        for (auto [a, b] : classes[lo]) tally[comp_of[a]].second++;
        int chosen = -1;
        for (int c = 0; c < comp; ++c)
            if (tally[c].first > tally[c].second) {
                chosen = c;
                break;
            }
        if (chosen < 0) break;  // perfectly balanced components; cannot improve
        std::vector<std::pair<int, int>> new_hi, new_lo;
        for (auto e : classes[hi])
            (comp_of[e.first] == chosen ? new_lo : new_hi).push_back(e);
        for (auto e : classes[lo])
            (comp_of[e.first] == chosen ? new_hi : new_lo).push_back(e);
        classes[hi] = std::move(new_hi);
        classes[lo] = std::move(new_lo);
    }
    return classes;
}

std::vector<std::array<std::string, 3>> SeedTriples::all() const {
    std::vector<std::array<std::string, 3>> out;
    out.insert(out.end(), ppu.begin(), ppu.end());
    out.insert(out.end(), paa.begin(), paa.end());
    out.insert(out.end(), aau.begin(), aau.end());
    return out;
}

SeedTriples build_seed_triples(const LabeledGraph& g, int p, int u, const SearchConfig& cfg) {
    const int a = g.n();
    if (p < 1 || u < 1) throw std::invalid_argument("build_seed_triples: p, u >= 1 required");
    // admissibility screen: the census must exist
    if (!class_counts(p, a, u, g.e()))
        throw std::invalid_argument("build_seed_triples: row is not admissible");

    SeedTriples seed;
    seed.graph = g;
    for (int i = 0; i < p; ++i) seed.P.push_back("p" + std::to_string(i));
    for (const auto& vtx : g.vertices) seed.A.push_back("a:" + vtx);
    for (int i = 0; i < u; ++i) seed.U.push_back("u" + std::to_string(i));

    LabeledGraph kp = graph_family(GraphFamily::Complete, p);
    LabeledGraph gc;  // complement of g
    gc.vertices = g.vertices;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j)
            if (!g.adjacent(i, j)) gc.edges.emplace_back(i, j);

    auto kp_classes = equitable_edge_colouring(kp, u);
    for (const auto& cls : kp_classes)
        if (cls.empty())
            throw std::invalid_argument("build_seed_triples: u exceeds the matchings of K_p");
    auto g_classes = g.edges.empty() ? std::vector<std::vector<std::pair<int, int>>>(p)
                                     : equitable_edge_colouring(g, p);
    auto gc_classes = gc.edges.empty() ? std::vector<std::vector<std::pair<int, int>>>(u)
                                       : equitable_edge_colouring(gc, u);

    // class-to-point assignment is shuffled under the seed
    std::mt19937_64 rng(cfg.seed * 7919ULL + 13);
    std::vector<int> uperm(u), pperm(p), uperm2(u);
    for (int i = 0; i < u; ++i) uperm[i] = i;
    for (int i = 0; i < p; ++i) pperm[i] = i;
    for (int i = 0; i < u; ++i) uperm2[i] = i;
    std::shuffle(uperm.begin(), uperm.end(), rng);
    std::shuffle(pperm.begin(), pperm.end(), rng);
    std::shuffle(uperm2.begin(), uperm2.end(), rng);

    for (int c = 0; c < u; ++c)
        for (auto [x, y] : kp_classes[c])
            seed.ppu.push_back({seed.P[x], seed.P[y], seed.U[uperm[c]]});
    for (int c = 0; c < p; ++c)
        for (auto [x, y] : g_classes[c])
            seed.paa.push_back({seed.A[x], seed.A[y], seed.P[pperm[c]]});
    for (int c = 0; c < u; ++c)
        for (auto [x, y] : gc_classes[c])
            seed.aau.push_back({seed.A[x], seed.A[y], seed.U[uperm2[c]]});
    return seed;
}

std::optional<TripleSystem> hillclimb_complete(const SeedTriples& seed, int v,
                                               const SearchConfig& cfg) {
    const int p = (int)seed.P.size(), a = (int)seed.A.size(), u = (int)seed.U.size();
    if (p + a + u != v) throw std::invalid_argument("hillclimb_complete: v != p+a+u");
    std::vector<std::string> labels;
    labels.insert(labels.end(), seed.P.begin(), seed.P.end());
    labels.insert(labels.end(), seed.A.begin(), seed.A.end());
    labels.insert(labels.end(), seed.U.begin(), seed.U.end());
    std::map<std::string, int> idx;
    for (int i = 0; i < v; ++i) idx[labels[i]] = i;

    for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
        Climb climb(v, cfg.seed * 6364136223846793005ULL + 1442695040888963407ULL + r);
        bool ok = true;
        for (const auto& b : seed.all()) {
            if (!climb.add_frozen({idx.at(b[0]), idx.at(b[1]), idx.at(b[2])})) {
                ok = false;
                break;
            }
        }
        if (!ok) throw std::invalid_argument("hillclimb_complete: frozen blocks collide");
        if (climb.run(cfg.max_iterations)) {
            TripleSystem ts = to_system(labels, climb.result());
            if (validate_sts(ts).ok) return ts;
        }
    }
    return std::nullopt;
}

namespace {

EmbeddingCertificate certificate_from(const SeedTriples& seed, TripleSystem ts) {
    EmbeddingCertificate cert;
    cert.partition = make_partition(ts, seed.P, seed.A, seed.U);
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [i, j] : seed.graph.edges)
        edges.emplace_back("a:" + seed.graph.vertices[i], "a:" + seed.graph.vertices[j]);
    cert.graph = make_graph(seed.A, edges);
    cert.ts = std::move(ts);
    return cert;
}

}  // namespace

SearchResult search_min_embedding(const LabeledGraph& g, int v_max, const SearchConfig& cfg) {
    SearchResult result;
    auto rows = admissible_parameters(g, v_max);
    if (cfg.priority == SearchPriority::LargeU)
        std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
            if (x.v != y.v) return x.v < y.v;
            return x.u > y.u;
        });

    for (const auto& row : rows) {
        auto obstruction = structural_obstruction(row);
        if (obstruction.kind == Obstruction::Blocked) {
            result.log.push_back({row.v, row.p, row.u, 0, "blocked", 0});
            continue;
        }
        for (int attempt = 0; attempt < cfg.assignment_retries; ++attempt) {
            auto t0 = Clock::now();
            SearchConfig sub = cfg;
            sub.seed = cfg.seed + 0x9e3779b97f4a7c15ULL * (attempt + 1);
            std::optional<TripleSystem> ts;
            try {
                SeedTriples seed = build_seed_triples(g, row.p, row.u, sub);
                // restarts run in waves of cfg.jobs; every restart in a wave
                // completes, so the first success is schedule-independent
                const int R = std::max(1, cfg.restarts);
                const int wave = std::max(1, cfg.jobs);
                for (int base = 0; base < R && !ts; base += wave) {
                    const int hi = std::min(R, base + wave);
                    std::vector<std::optional<TripleSystem>> found(hi - base);
#ifdef _OPENMP
                    #pragma omp parallel for schedule(dynamic) num_threads(wave) if (cfg.jobs > 1)
#endif
                    for (int r = base; r < hi; ++r) {
                        SearchConfig one = sub;
                        one.seed = sub.seed + 77771ULL * r;
                        one.restarts = 1;
                        found[r - base] = hillclimb_complete(seed, row.v, one);
                    }
                    for (auto& f : found)
                        if (f && !ts) ts = std::move(f);
                }
                if (ts) {
                    EmbeddingCertificate cert = certificate_from(seed, std::move(*ts));
                    if (verify_embedding(cert).ok) {
                        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      Clock::now() - t0)
                                      .count();
                        result.log.push_back({row.v, row.p, row.u, attempt, "ok", ms});
                        result.cert = std::move(cert);
                        result.v = row.v;
                        return result;
                    }
                }
            } catch (const std::invalid_argument&) {
                // row not seedable with this colouring; fall through to log
            }
            long ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            result.log.push_back({row.v, row.p, row.u, attempt, "fail", ms});
        }
    }
    return result;
}

GraphCatalog sample_and_harvest(int v, int n_samples, const SearchConfig& cfg,
                                const HarvestLimits& limits) {
    GraphCatalog merged;
    std::vector<GraphCatalog> partial(std::max(1, n_samples));
#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic) num_threads(std::max(1, cfg.jobs)) if (cfg.jobs > 1)
#endif
    for (int i = 0; i < std::max(1, n_samples); ++i) {
        SearchConfig sub = cfg;
        sub.seed = cfg.seed + 104729ULL * i;
        auto ts = hillclimb_sts(v, sub);
        if (!ts) continue;
        partial[i] = harvest_graphs(*ts, limits, 1);
    }
    for (auto& p : partial) merged.merge(p);
    return merged;
}

std::string format_attempt_log(const std::vector<AttemptRecord>& log) {
    std::ostringstream out;
    for (const auto& r : log)
        out << r.v << " " << r.p << " " << r.u << " " << r.attempt << " " << r.result << " "
            << r.millis << "\n";
    return out.str();
}

}  // namespace nofil
