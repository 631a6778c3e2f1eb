#include "nofil/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace nofil {
namespace {

// Canonical form = lexicographically smallest upper-triangle bit string
// over all vertex orderings, bits emitted column by column: placing the
// vertex at position j appends bits adj(pi(0),pi(j)) .. adj(pi(j-1),pi(j)).
// Branch and bound on the shared prefix; a refinement ordering by
// (degree, neighbour degree multiset) seeds the first candidate.
struct Canonizer {
    int n;
    std::vector<uint16_t> adj;
    std::vector<uint8_t> best;
    std::vector<uint8_t> cur;
    std::vector<int> perm;
    uint16_t placed_mask = 0;

    void seed(const std::vector<int>& order) {
        best.clear();
        best.reserve(size_t(n) * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                best.push_back((adj[order[i]] >> order[j]) & 1);
    }

    // tight: the current prefix equals best's prefix; after best improves
    // mid-search the flag may be stale-false, so leaves compare in full
    void dfs(int pos, size_t bit_at, bool tight) {
        if (pos == n) {
            if (!tight && cur < best) best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (placed_mask & (uint16_t(1) << v)) continue;
            bool next_tight = tight;
            bool worse = false;
            size_t b = bit_at;
            for (int i = 0; i < pos; ++i, ++b) {
                uint8_t bit = (adj[perm[i]] >> v) & 1;
                cur[b] = bit;
                if (next_tight) {
                    if (bit > best[b]) {
                        worse = true;
                        break;
                    }
                    if (bit < best[b]) next_tight = false;
                }
            }
            if (worse) continue;
            perm[pos] = v;
            placed_mask |= uint16_t(1) << v;
            dfs(pos + 1, bit_at + pos, next_tight);
            placed_mask &= ~(uint16_t(1) << v);
        }
    }

    std::vector<uint8_t> run(const std::vector<int>& order) {
        seed(order);
        cur.assign(size_t(n) * (n - 1) / 2, 0);
        perm.assign(n, -1);
        dfs(0, 0, true);
        return best;
    }
};

}  // namespace

std::string canonical_form(const LabeledGraph& g, int max_vertices) {
    const int n = g.n();
    if (n > max_vertices || n > 16)
        throw std::invalid_argument("canonical_form: graph above vertex cap");
    if (n == 0) return "g0:";

    Canonizer cz;
    cz.n = n;
    cz.adj.assign(n, 0);
    for (auto [i, j] : g.edges) {
        cz.adj[i] |= uint16_t(1) << j;
        cz.adj[j] |= uint16_t(1) << i;
    }

    auto deg = g.degrees();
    std::vector<std::vector<int>> nd(n);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u)
            if (cz.adj[v] & (uint16_t(1) << u)) nd[v].push_back(deg[u]);
        std::sort(nd[v].begin(), nd[v].end());
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (deg[a] != deg[b]) return deg[a] < deg[b];
        return nd[a] < nd[b];
    });
    auto bits = cz.run(order);

    std::string out = "g" + std::to_string(n) + ":";
    uint8_t acc = 0;
    int nb = 0;
    for (uint8_t bit : bits) {
        acc = uint8_t((acc << 1) | bit);
        if (++nb == 4) {
            out += "0123456789abcdef"[acc];
            acc = 0;
            nb = 0;
        }
    }
    if (nb) out += "0123456789abcdef"[acc << (4 - nb)];
    return out;
}

}  // namespace nofil
