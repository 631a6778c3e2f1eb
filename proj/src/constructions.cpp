#include "nofil/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nofil/io.hpp"
#include "nofil/skolem.hpp"

namespace nofil {
namespace {

long modn(long x, long n) { return ((x % n) + n) % n; }

std::string coord_label(long i, int copy) {
    return std::to_string(i) + "_" + std::to_string(copy);
}

}  // namespace

std::string cyclic_label(const CyclicPresentation& cp, const CyclicPoint& pt) {
    if (pt.is_fixed) return cp.fixed[pt.copy];
    return coord_label(modn(pt.coord, cp.modulus), pt.copy);
}

TripleSystem expand_orbits_unchecked(const CyclicPresentation& cp) {
    const int n = cp.modulus;
    std::vector<std::string> labels;
    for (int c : cp.copies)
        for (int i = 0; i < n; ++i) labels.push_back(coord_label(i, c));
    for (const auto& f : cp.fixed) labels.push_back(f);

    std::vector<std::array<std::string, 3>> blocks;
    for (const auto& base : cp.base_blocks) {
        for (int g = 0; g < n; ++g) {
            std::array<std::string, 3> b;
            for (int k = 0; k < 3; ++k) {
                CyclicPoint pt = base[k];
                if (!pt.is_fixed) pt.coord = (int)modn(pt.coord + g, n);
                b[k] = cyclic_label(cp, pt);
            }
            blocks.push_back(b);
        }
    }
    return make_triple_system(std::move(labels), blocks);  // dedupes short orbits
}

TripleSystem expand_orbits(const CyclicPresentation& cp) {
    TripleSystem ts = expand_orbits_unchecked(cp);
    auto rep = validate_sts(ts);
    if (!rep.ok) {
        std::string msg = "orbit expansion is not a triple system";
        if (!rep.violations.empty()) msg += ": " + rep.violations.front();
        throw std::runtime_error(msg);
    }
    return ts;
}

MatchingDecomposition decompose_P_matchings(int l) {
    if (l < 2) throw std::invalid_argument("decompose_P_matchings: l >= 2 required");
    MatchingDecomposition md;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < 2; ++j)
            md.vertices.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
    const int n = 2 * l;
    auto part_of = [](int x) { return x / 2; };

    md.classes.assign(2 * l + 1, {});
    for (int i = 0; i < l; ++i) md.classes[2 * l].emplace_back(2 * i, 2 * i + 1);

    if (l == 2) {
        // the required (2l-2)-cycles degenerate at l=2 and the miss-part-i
        // contract is unsatisfiable; cover the cross edges by two cross
        // matchings so the union contract still holds (embed_complete(4)
        // does not use this recipe)
        md.classes[0] = {{0, 2}, {1, 3}};
        md.classes[1] = {{0, 3}, {1, 2}};
        return md;
    }

    // edge-disjoint Hamiltonian cycles, cycle i on V minus part i, covering
    // every non-part edge; backtracking at desk scale
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    for (int i = 0; i < l; ++i) used[2 * i][2 * i + 1] = used[2 * i + 1][2 * i] = 1;
    std::vector<std::vector<int>> cycles(l);

    std::function<bool(int)> build = [&](int i) {
        if (i == l) return true;
        std::vector<int> verts;
        for (int x = 0; x < n; ++x)
            if (part_of(x) != i) verts.push_back(x);
        const int m = (int)verts.size();
        std::vector<int> path{verts[0]};
        std::vector<char> in_path(n, 0);
        in_path[verts[0]] = 1;
        std::function<bool()> extend = [&]() {
            if ((int)path.size() == m) {
                int a = path.back(), b = path.front();
                if (used[a][b]) return false;
                used[a][b] = used[b][a] = 1;
                cycles[i] = path;
                if (build(i + 1)) return true;
                used[a][b] = used[b][a] = 0;
                return false;
            }
            int cur = path.back();
            for (int nxt : verts) {
                if (in_path[nxt] || used[cur][nxt]) continue;
                used[cur][nxt] = used[nxt][cur] = 1;
                in_path[nxt] = 1;
                path.push_back(nxt);
                if (extend()) return true;
                path.pop_back();
                in_path[nxt] = 0;
                used[cur][nxt] = used[nxt][cur] = 0;
            }
            return false;
        };
        return extend();
    };
    if (!build(0)) throw std::runtime_error("cycle decomposition search failed");

    for (int i = 0; i < l; ++i) {
        const auto& cy = cycles[i];
        for (size_t k = 0; k < cy.size(); ++k) {
            int a = cy[k], b = cy[(k + 1) % cy.size()];
            md.classes[2 * i + (k % 2)].emplace_back(a, b);
        }
    }
    return md;
}

MatchingDecomposition decompose_A_matchings(int a) {
    if (a < 2 || a % 2) throw std::invalid_argument("decompose_A_matchings: even a required");
    MatchingDecomposition md;
    for (int i = 0; i < a; ++i) md.vertices.push_back(std::to_string(i));
    md.classes.assign(a, {});
    for (int i = 0; i < a / 2; ++i) {
        for (int k = 0; k < a / 2; ++k)
            md.classes[2 * i].emplace_back((int)modn(i - k, a), (int)modn(i + k + 1, a));
        for (int k = 1; k < a / 2; ++k)
            md.classes[2 * i + 1].emplace_back((int)modn(i - k, a), (int)modn(i + k, a));
    }
    return md;
}

MatchingDecomposition near_one_factorization(int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("near_one_factorization: odd m required");
    MatchingDecomposition md;
    for (int i = 0; i < m; ++i) md.vertices.push_back(std::to_string(i));
    md.classes.assign(m, {});
    for (int i = 0; i < m; ++i)
        for (int j = 1; j <= (m - 1) / 2; ++j)
            md.classes[i].emplace_back((int)modn(i - j, m), (int)modn(i + j, m));
    return md;
}

namespace {

// exact completion of a partial system to an STS(v) avoiding forbidden block
// classes under a fixed partition; deterministic first solution
bool complete_sts_constrained(int v, const PointPartition& part, std::vector<Block>& blocks) {
    std::vector<std::vector<char>> covered(v, std::vector<char>(v, 0));
    for (const auto& b : blocks)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                if (covered[b.pts[i]][b.pts[j]]) return false;
                covered[b.pts[i]][b.pts[j]] = covered[b.pts[j]][b.pts[i]] = 1;
            }
    std::function<bool()> go = [&]() {
        int x = -1, y = -1;
        for (int i = 0; i < v && x < 0; ++i)
            for (int j = i + 1; j < v; ++j)
                if (!covered[i][j]) {
                    x = i;
                    y = j;
                    break;
                }
        if (x < 0) return true;
        for (int z = 0; z < v; ++z) {
            if (z == x || z == y || covered[x][z] || covered[y][z]) continue;
            Block b(x, y, z);
            if (classify_block(b, part) == BlockClass::FORBIDDEN) continue;
            covered[x][y] = covered[y][x] = 1;
            covered[x][z] = covered[z][x] = 1;
            covered[y][z] = covered[z][y] = 1;
            blocks.push_back(b);
            if (go()) return true;
            blocks.pop_back();
            covered[x][y] = covered[y][x] = 0;
            covered[x][z] = covered[z][x] = 0;
            covered[y][z] = covered[z][y] = 0;
        }
        return false;
    };
    return go();
}

EmbeddingCertificate embed_complete_two() {
    // the even-order recipe collapses at a=2; this is the direct
    // analogue, a valid STS(7) whose partition cannot satisfy the unplayable
    // constraint (no partition of any STS(7) can, for K_2)
    std::vector<std::string> pts{"p0_0", "p0_1", "a0_0", "a0_1", "u0_0", "u0_1", "u_inf"};
    std::vector<std::array<std::string, 3>> blocks{
        {"p0_0", "p0_1", "u_inf"}, {"a0_0", "a0_1", "p0_0"}, {"p0_1", "a0_0", "u0_0"},
        {"p0_1", "a0_1", "u0_1"},  {"p0_0", "u0_0", "u0_1"}, {"a0_0", "u_inf", "u0_1"},
        {"a0_1", "u0_0", "u_inf"}};
    EmbeddingCertificate cert;
    cert.ts = make_triple_system(pts, blocks);
    cert.partition = make_partition(cert.ts, {"p0_0", "p0_1"}, {"a0_0", "a0_1"},
                                    {"u0_0", "u0_1", "u_inf"});
    cert.graph = make_graph({"a0_0", "a0_1"}, {{"a0_0", "a0_1"}});
    return cert;
}

EmbeddingCertificate embed_complete_four() {
    // the l=2 case of the matching recipe is degenerate; freeze the forced
    // PAA skeleton and complete the remaining blocks exactly
    std::vector<std::string> pts;
    for (int i = 0; i < 4; ++i) pts.push_back("p" + std::to_string(i));
    for (int i = 0; i < 4; ++i) pts.push_back("a" + std::to_string(i));
    for (int i = 0; i < 5; ++i) pts.push_back("u" + std::to_string(i));
    auto P = [](int i) { return i; };
    auto A = [](int i) { return 4 + i; };

    auto U = [](int i) { return 8 + i; };
    // forced skeleton: the PAA matchings, a PPU cover touching every
    // unplayable point, and the played/unplayable pair completion
    std::vector<Block> blocks{
        Block(P(0), A(0), A(1)), Block(P(0), A(2), A(3)), Block(P(1), A(0), A(2)),
        Block(P(1), A(1), A(3)), Block(P(2), A(0), A(3)), Block(P(3), A(1), A(2)),
        Block(P(0), P(1), U(0)), Block(P(0), P(2), U(1)), Block(P(0), P(3), U(2)),
        Block(P(1), P(2), U(3)), Block(P(1), P(3), U(4)), Block(P(2), P(3), U(0)),
        Block(P(2), A(1), U(2)), Block(P(2), A(2), U(4)), Block(P(3), A(0), U(1)),
        Block(P(3), A(3), U(3)), Block(P(0), U(3), U(4)), Block(P(1), U(1), U(2))};
    PointPartition part;
    part.cls.assign(13, PointClass::Unplayable);
    for (int i = 0; i < 4; ++i) part.cls[i] = PointClass::Played;
    for (int i = 4; i < 8; ++i) part.cls[i] = PointClass::Available;
    part.p = 4;
    part.a = 4;
    part.u = 5;
    if (!complete_sts_constrained(13, part, blocks))
        throw std::runtime_error("embed_complete(4): completion failed");

    EmbeddingCertificate cert;
    std::vector<std::array<std::string, 3>> bl;
    for (const auto& b : blocks) bl.push_back({pts[b.pts[0]], pts[b.pts[1]], pts[b.pts[2]]});
    cert.ts = make_triple_system(pts, bl);
    cert.partition = make_partition(cert.ts, {"p0", "p1", "p2", "p3"}, {"a0", "a1", "a2", "a3"},
                                    {"u0", "u1", "u2", "u3", "u4"});
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            edges.emplace_back("a" + std::to_string(i), "a" + std::to_string(j));
    cert.graph = make_graph({"a0", "a1", "a2", "a3"}, edges);
    auto rep = verify_embedding(cert);
    if (!rep.ok) throw std::runtime_error("embed_complete(4): verification failed");
    return cert;
}

EmbeddingCertificate embed_complete_odd(int a) {
    const int inv2 = (a + 1) / 2;  // inverse of 2 mod a
    std::vector<std::string> pts;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < a; ++i) pts.push_back(coord_label(i, k));
    std::vector<std::array<std::string, 3>> blocks;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                blocks.push_back({coord_label(i, k), coord_label(j, k),
                                  coord_label(modn(long(i + j) * inv2, a), (k + 2) % 3)});
    for (int i = 0; i < a; ++i)
        blocks.push_back({coord_label(i, 0), coord_label(i, 1), coord_label(i, 2)});

    EmbeddingCertificate cert;
    cert.ts = make_triple_system(pts, blocks);
    std::vector<std::string> P, A, U;
    for (int i = 0; i < a; ++i) {
        P.push_back(coord_label(i, 0));
        A.push_back(coord_label(i, 1));
        U.push_back(coord_label(i, 2));
    }
    cert.partition = make_partition(cert.ts, P, A, U);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) edges.emplace_back(A[i], A[j]);
    cert.graph = make_graph(A, edges);
    return cert;
}

EmbeddingCertificate embed_complete_even(int a) {
    const int l = a / 2;
    auto Pd = decompose_P_matchings(l);
    auto Ad = decompose_A_matchings(a);
    auto Ud = near_one_factorization(a + 1);

    auto pl = [](int i, int j) { return "p" + std::to_string(i) + "_" + std::to_string(j); };
    auto al = [](int i, int j) { return "a" + std::to_string(i) + "_" + std::to_string(j); };
    auto ul = [](int i, int j) { return "u" + std::to_string(i) + "_" + std::to_string(j); };

    std::vector<std::string> P, A, U;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < 2; ++j) {
            P.push_back(pl(i, j));
            A.push_back(al(i, j));
            U.push_back(ul(i, j));
        }
    U.push_back("u_inf");

    // relabelings: P-vertex 2i+j -> p{i}_{j}; A classes live on Z_a with
    // m -> a{m mod l}_{m div l}; U classes on Z_{a+1} with 0 -> u_inf,
    // i+1 -> u{i}_0, a-i -> u{i}_1
    auto pmap = [&](int x) { return pl(x / 2, x % 2); };
    auto amap = [&](int x) { return al(x % l, x / l); };
    auto umap = [&](int x) {
        if (x == 0) return std::string("u_inf");
        if (x <= l) return ul(x - 1, 0);
        return ul(a - x, 1);
    };

    std::vector<std::array<std::string, 3>> blocks;
    for (auto [x, y] : Pd.classes[2 * l]) blocks.push_back({pmap(x), pmap(y), "u_inf"});
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < 2; ++j)
            for (auto [x, y] : Pd.classes[2 * i + j])
                blocks.push_back({pmap(x), pmap(y), ul(i, j)});
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < 2; ++j)
            for (auto [x, y] : Ad.classes[2 * i + j])
                blocks.push_back({amap(x), amap(y), pl(i, j)});
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < 2; ++j) blocks.push_back({pl(i, 1), al(i, j), ul(i, j)});
        blocks.push_back({pl(i, 0), ul(i, 0), ul(i, 1)});
    }
    for (int i = 0; i < l; ++i) {
        for (auto [x, y] : Ud.classes[i + 1]) blocks.push_back({al(i, 0), umap(x), umap(y)});
        for (auto [x, y] : Ud.classes[a - i]) blocks.push_back({al(i, 1), umap(x), umap(y)});
    }

    EmbeddingCertificate cert;
    std::vector<std::string> pts;
    pts.insert(pts.end(), P.begin(), P.end());
    pts.insert(pts.end(), A.begin(), A.end());
    pts.insert(pts.end(), U.begin(), U.end());
    cert.ts = make_triple_system(pts, blocks);
    cert.partition = make_partition(cert.ts, P, A, U);
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j) edges.emplace_back(A[i], A[j]);
    cert.graph = make_graph(A, edges);
    return cert;
}

}  // namespace

EmbeddingCertificate embed_complete(int a) {
    if (a < 2) throw std::invalid_argument("embed_complete: a >= 2 required");
    if (a == 2) return embed_complete_two();
    if (a % 2) return embed_complete_odd(a);
    if (a == 4) return embed_complete_four();
    return embed_complete_even(a);
}

std::optional<std::vector<std::array<long, 3>>> cyclic_sts_base_blocks(int v) {
    if (v < 3 || (v % 6 != 1 && v % 6 != 3))
        throw std::invalid_argument("cyclic_sts_base_blocks: v = 1,3 (mod 6) required");
    if (v == 3) return std::vector<std::array<long, 3>>{{0, 1, 2}};
    std::vector<std::array<long, 3>> out;
    if (v % 6 == 1) {
        const int s = v / 6;
        SeqKind kind = (s % 4 == 0 || s % 4 == 1) ? SeqKind::Skolem : SeqKind::Hooked;
        PairSequence seq = generate(kind, s, 1, 5);
        for (int r = 1; r <= s; ++r) out.push_back({0, r, seq.pair_for(r).second + s});
        return out;
    }
    const int s = v / 6;  // v = 6s+3
    if (s >= 3 && (s % 4 == 0 || s % 4 == 3)) {
        PairSequence seq = generate(SeqKind::Split, s, 1, 5);
        for (int r = 1; r <= s; ++r) out.push_back({0, r, seq.pair_for(r).second + s});
        out.push_back({0, 2L * s + 1, 4L * s + 2});
        return out;
    }
    // difference-family backtracking over the classes {1..3s+1} minus the
    // short class 2s+1; no solution exists at v = 9
    std::vector<int> classes;
    for (int c = 1; c <= 3 * s + 1; ++c)
        if (c != 2 * s + 1) classes.push_back(c);
    std::vector<std::array<long, 3>> fam;
    std::function<bool(std::vector<int>)> solve = [&](std::vector<int> rest) {
        if (rest.empty()) return true;
        int x = rest.front();
        for (size_t i = 1; i < rest.size(); ++i)
            for (size_t j = i + 1; j < rest.size(); ++j) {
                int y = rest[i], z = rest[j];
                // realizable triples: x+y=z (up to permutation) or x+y+z=v
                std::array<long, 3> blk;
                if (x + y == z || x + y + z == v)
                    blk = {0, x, x + y};
                else if (x + z == y)
                    blk = {0, x, x + z};
                else
                    continue;
                std::vector<int> next;
                for (size_t k = 1; k < rest.size(); ++k)
                    if (k != i && k != j) next.push_back(rest[k]);
                fam.push_back(blk);
                if (solve(next)) return true;
                fam.pop_back();
            }
        return false;
    };
    if (!solve(classes)) return std::nullopt;
    out = fam;
    out.push_back({0, 2L * s + 1, 4L * s + 2});
    return out;
}

const char* to_string(MinimalityTag t) {
    switch (t) {
        case MinimalityTag::Minimal: return "minimal";
        case MinimalityTag::Next: return "next";
        case MinimalityTag::Third: return "third";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// star embeddings

namespace {

constexpr const char* kStar3Cert = R"(P: 4 5 6 7
A: 0 3 9
U: 1 2 8 10 11 12
EDGES:
0 9
3 9
BLOCKS:
4 5 10
4 6 11
4 7 12
5 6 8
2 5 7
1 6 7
0 5 9
3 7 9
1 4 9
0 2 4
3 4 8
2 6 9
0 6 10
3 6 12
3 5 11
0 7 8
7 10 11
1 5 12
0 1 3
9 10 12
8 9 11
2 3 10
0 11 12
1 8 10
1 2 11
2 8 12
)";

constexpr const char* kStar4Cert = R"(P: 1 2 3 8 10 13
A: 0 9 15 17
U: 4 5 6 7 11 12 14 16 18
EDGES:
0 15
9 15
15 17
BLOCKS:
3 8 11
3 13 18
3 7 10
1 3 6
2 3 5
8 13 16
2 10 16
1 8 18
4 8 10
2 8 12
1 2 4
1 10 14
1 12 13
2 11 13
5 10 13
3 15 17
0 2 15
9 10 15
3 9 16
0 3 4
0 1 16
0 7 8
8 14 17
6 8 9
5 8 15
2 9 18
4 9 13
1 7 9
2 7 17
7 13 15
0 13 14
0 10 12
1 5 17
1 11 15
10 11 17
6 13 17
3 12 14
6 10 18
2 6 14
0 17 18
9 12 17
0 5 9
15 16 18
4 16 17
4 14 15
9 11 14
6 12 15
0 6 11
7 14 16
11 12 16
5 6 16
4 11 18
7 12 18
5 14 18
4 6 7
4 5 12
5 7 11
)";

constexpr const char* kStar6Cert = R"(P: 5 6 9 11 17
A: 2 4 13 14 16 18
U: 0 1 3 7 8 10 12 15
EDGES:
2 14
4 14
13 14
14 16
14 18
BLOCKS:
0 5 9
0 6 11
3 5 11
5 6 7
1 5 17
8 9 11
6 9 15
7 9 17
10 11 17
6 12 17
13 14 17
5 14 18
4 9 14
2 11 14
6 14 16
5 10 13
3 9 13
11 13 15
1 6 13
0 17 18
2 5 15
4 5 8
5 12 16
2 9 12
1 9 18
9 10 16
7 11 18
4 11 12
1 11 16
4 15 17
4 6 10
2 8 17
2 3 6
6 8 18
3 16 17
0 4 13
2 7 13
12 13 18
8 13 16
0 2 16
15 16 18
4 7 16
1 2 4
3 4 18
2 10 18
0 8 14
3 14 15
7 10 14
1 12 14
0 1 15
0 7 12
0 3 10
7 8 15
10 12 15
1 3 7
3 8 12
1 8 10
)";

using Base = std::array<CyclicPoint, 3>;

CyclicPoint W(long i, int copy) { return {false, (int)i, copy}; }
CyclicPoint FX(int idx) { return {true, 0, idx}; }

struct StarParts {
    CyclicPresentation cp;
    // blocks outside the group action (a non-cyclic triple system filling the
    // fourth copy when no cyclic one exists)
    std::vector<std::array<std::string, 3>> extra;
    std::vector<std::string> P, A, U;
    std::string center;
};

struct Copy4Family {
    std::vector<std::array<long, 3>> base;             // orbit generators
    std::vector<std::array<long, 3>> explicit_blocks;  // used verbatim
};

// a triple system on Z_n for the fourth copy: cyclic base blocks when they
// exist, the affine plane of order 3 at n = 9
std::optional<Copy4Family> copy4_family(int n) {
    if (auto bb = cyclic_sts_base_blocks(n)) return Copy4Family{*bb, {}};
    if (n == 9)
        return Copy4Family{{},
                           {{0, 1, 2},
                            {3, 4, 5},
                            {6, 7, 8},
                            {0, 3, 6},
                            {1, 4, 7},
                            {2, 5, 8},
                            {0, 4, 8},
                            {1, 5, 6},
                            {2, 3, 7},
                            {0, 5, 7},
                            {1, 3, 8},
                            {2, 4, 6}}};
    return std::nullopt;
}

void attach_copy4(StarParts& sp, const Copy4Family& fam) {
    for (const auto& b : fam.base)
        sp.cp.base_blocks.push_back({W(b[0], 4), W(b[1], 4), W(b[2], 4)});
    for (const auto& b : fam.explicit_blocks)
        sp.extra.push_back({coord_label(b[0], 4), coord_label(b[1], 4), coord_label(b[2], 4)});
}

// the 24t+7 system over Z_{6t+1} x {1,2,3,4} with three fixed points;
// offset o = 0 uses plain fourth-copy positions b_r, o = 1 uses b_r + 1
StarParts build_24t7(int t, const PairSequence& seq, int o, const Copy4Family& copy4) {
    const int n = 6 * t + 1;
    StarParts sp;
    auto& cp = sp.cp;
    cp.modulus = n;
    cp.copies = {1, 2, 3, 4};
    cp.fixed = {"inf_1", "inf_2", "inf_3"};
    auto T = [&](int r) { return modn(seq.pair_for(r).second + o, n); };

    for (int r = 1; r <= 3 * t; ++r) cp.base_blocks.push_back({W(0, 1), W(r, 1), W(T(r), 4)});
    cp.base_blocks.push_back({FX(0), W(0, 1), W(0, 3)});
    cp.base_blocks.push_back({FX(1), W(0, 1), W(0, 2)});
    cp.base_blocks.push_back({FX(0), FX(1), FX(2)});
    for (int r = 1; r <= 6 * t; ++r) cp.base_blocks.push_back({W(0, 1), W(2 * r, 2), W(r, 3)});
    cp.base_blocks.push_back({FX(0), W(0, 2), W(0, 4)});
    cp.base_blocks.push_back({FX(2), W(0, 1), W(0, 4)});
    for (int r = 1; r <= 3 * t; ++r) cp.base_blocks.push_back({W(0, 2), W(r, 2), W(T(r), 4)});
    cp.base_blocks.push_back({FX(2), W(0, 2), W(0, 3)});
    cp.base_blocks.push_back({FX(1), W(0, 3), W(0, 4)});
    for (int r = 1; r <= 3 * t; ++r) cp.base_blocks.push_back({W(0, 3), W(r, 3), W(T(r), 4)});
    attach_copy4(sp, copy4);

    for (int i = 0; i < n; ++i) sp.P.push_back(coord_label(i, 1));
    sp.P.push_back("inf_1");
    for (int i = 0; i < n; ++i) sp.A.push_back(coord_label(i, 2));
    sp.A.push_back("inf_2");
    for (int c : {3, 4})
        for (int i = 0; i < n; ++i) sp.U.push_back(coord_label(i, c));
    sp.center = "inf_2";
    return sp;
}

// the 24t+15 system over Z_{6t+3} x {1,2,3,4} with three fixed points
StarParts build_5mod6(int t, const PairSequence& seq, int o, const Copy4Family& copy4) {
    const int n = 6 * t + 3;
    StarParts sp;
    auto& cp = sp.cp;
    cp.modulus = n;
    cp.copies = {1, 2, 3, 4};
    cp.fixed = {"inf_1", "inf_2", "inf_3"};
    auto T = [&](int r) { return modn(seq.pair_for(r).second + o, n); };

    for (int r = 1; r <= 3 * t + 1; ++r) cp.base_blocks.push_back({W(0, 1), W(r, 1), W(T(r), 4)});
    cp.base_blocks.push_back({FX(0), W(0, 1), W(0, 3)});
    cp.base_blocks.push_back({FX(1), W(0, 1), W(0, 2)});
    cp.base_blocks.push_back({FX(0), FX(1), FX(2)});
    for (int r = 1; r <= 6 * t + 2; ++r) cp.base_blocks.push_back({W(0, 1), W(2 * r, 2), W(r, 3)});
    cp.base_blocks.push_back({FX(0), W(0, 2), W(0, 4)});
    cp.base_blocks.push_back({FX(2), W(0, 1), W(0, 4)});
    for (int r = 1; r <= 3 * t + 1; ++r) cp.base_blocks.push_back({W(0, 2), W(r, 2), W(T(r), 4)});
    cp.base_blocks.push_back({FX(2), W(0, 2), W(0, 3)});
    cp.base_blocks.push_back({FX(1), W(0, 3), W(0, 4)});
    for (int r = 1; r <= 3 * t + 1; ++r) cp.base_blocks.push_back({W(0, 3), W(r, 3), W(T(r), 4)});
    attach_copy4(sp, copy4);

    for (int i = 0; i < n; ++i) sp.P.push_back(coord_label(i, 1));
    sp.P.push_back("inf_1");
    for (int i = 0; i < n; ++i) sp.A.push_back(coord_label(i, 2));
    sp.A.push_back("inf_2");
    sp.A.push_back("inf_3");
    for (int c : {3, 4})
        for (int i = 0; i < n; ++i) sp.U.push_back(coord_label(i, c));
    sp.center = "inf_2";
    return sp;
}

// the STS(4a-3) over Z_{a-1} x {1,2,3,4} with one fixed point, a = 0 (mod 6)
StarParts build_0mod6(int a) {
    const int t = a / 6;
    const int n = a - 1;  // 6t - 1
    StarParts sp;
    auto& cp = sp.cp;
    cp.modulus = n;
    cp.copies = {1, 2, 3, 4};
    cp.fixed = {"inf"};

    const int m24 = a % 24;
    if (m24 == 6) {
        PairSequence ab = generate(SeqKind::Hooked, 3 * t - 1, 1, 11);
        PairSequence cd = generate(SeqKind::Skolem, t - 1, 1, 11);
        auto B = [&](int r) { return (long)ab.pair_for(r).second; };
        for (int r = 1; r <= 3 * t - 1; ++r)
            if (r != 4) cp.base_blocks.push_back({W(0, 1), W(r, 1), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 1), W(4, 1), W(2, 3)});
        cp.base_blocks.push_back({FX(0), W(0, 2), W(-3, 1)});
        for (int r = 1; r <= 6 * t - 4; ++r)
            if (r != 2 && r != 3 * t - 2 && r != 3 * t - 1)
                cp.base_blocks.push_back({W(2 * r, 1), W(0, 2), W(r, 3)});
        cp.base_blocks.push_back({W(0, 1), W(0, 2), W(-1, 4)});
        cp.base_blocks.push_back({W(-2, 1), W(0, 2), W(3 * t - 1, 3)});
        cp.base_blocks.push_back({W(-1, 1), W(0, 2), W(-1, 3)});
        cp.base_blocks.push_back({W(4, 1), W(0, 2), W(B(4), 4)});
        cp.base_blocks.push_back({W(0, 1), W(4, 2), W(B(4), 4)});
        cp.base_blocks.push_back({W(-1, 1), W(0, 3), W(3 * t - 1, 3)});
        for (int r = 1; r <= 3 * t - 1; ++r)
            if (r != 4) cp.base_blocks.push_back({W(0, 2), W(r, 2), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 2), W(4, 2), W(2, 3)});
        cp.base_blocks.push_back({FX(0), W(0, 3), W(1, 4)});
        cp.base_blocks.push_back({W(0, 2), W(0, 3), W(3 * t - 2, 3)});
        for (int r = 1; r <= 3 * t - 1; ++r)
            cp.base_blocks.push_back({W(0, 4), W(r, 4), W(B(r), 3)});
        for (int r = 1; r <= t - 1; ++r)
            cp.base_blocks.push_back({W(0, 3), W(r, 3), W(cd.pair_for(r).second + t - 1, 3)});
    } else if (m24 == 12) {
        PairSequence ab = generate(SeqKind::Skolem, 3 * t - 1, 1, 11);
        PairSequence cd = generate(SeqKind::Skolem, t - 1, 1, 11);
        auto B = [&](int r) { return (long)ab.pair_for(r).second; };
        for (int r = 1; r <= 3 * t - 1; ++r)
            if (r != 4) cp.base_blocks.push_back({W(0, 1), W(r, 1), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 1), W(4, 1), W(2, 3)});
        cp.base_blocks.push_back({FX(0), W(0, 1), W(3, 2)});
        for (int r = 1; r <= 6 * t - 4; ++r)
            if (r != 2 && r != 3 * t - 2 && r != 3 * t - 1)
                cp.base_blocks.push_back({W(0, 1), W(-2 * r, 2), W(-r, 3)});
        cp.base_blocks.push_back({W(0, 1), W(0, 2), W(0, 4)});
        cp.base_blocks.push_back({W(0, 1), W(2, 2), W(3 * t + 1, 3)});
        cp.base_blocks.push_back({W(0, 1), W(1, 2), W(0, 3)});
        cp.base_blocks.push_back({W(4, 1), W(0, 2), W(B(4), 4)});
        cp.base_blocks.push_back({W(0, 1), W(4, 2), W(B(4), 4)});
        cp.base_blocks.push_back({W(-1, 1), W(0, 3), W(3 * t - 1, 3)});
        for (int r = 1; r <= 3 * t - 1; ++r)
            if (r != 4) cp.base_blocks.push_back({W(0, 2), W(r, 2), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 2), W(4, 2), W(2, 3)});
        cp.base_blocks.push_back({FX(0), W(0, 3), W(0, 4)});
        cp.base_blocks.push_back({W(0, 2), W(0, 3), W(3 * t - 2, 3)});
        for (int r = 1; r <= 3 * t - 1; ++r)
            cp.base_blocks.push_back({W(B(r), 3), W(0, 4), W(r, 4)});
        for (int r = 1; r <= t - 1; ++r)
            cp.base_blocks.push_back({W(0, 3), W(r, 3), W(cd.pair_for(r).second + t - 1, 3)});
    } else {  // a = 0, 18 (mod 24)
        PairSequence ab = generate(SeqKind::Split, 3 * t - 1, 1, 11);
        PairSequence cd = generate(SeqKind::Hooked, t - 1, 1, 11);
        auto Aa = [&](int r) { return (long)ab.pair_for(r).first; };
        auto B = [&](int r) { return (long)ab.pair_for(r).second; };
        for (int r = 1; r <= 3 * t - 1; ++r)
            if (r != 7) cp.base_blocks.push_back({W(0, 1), W(r, 1), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 1), W(7, 1), W(5, 3)});
        cp.base_blocks.push_back({FX(0), W(0, 1), W(5, 2)});
        for (int r = 1; r <= 6 * t - 5; ++r)
            if (r != 4 && r != 3 * t - 1 && r != 3 * t)
                cp.base_blocks.push_back({W(0, 1), W(1 - 2 * r, 2), W(2 - r, 3)});
        cp.base_blocks.push_back({W(0, 1), W(0, 2), W(3 * t, 4)});
        cp.base_blocks.push_back({W(0, 1), W(2, 2), W(2, 3)});
        cp.base_blocks.push_back({W(0, 1), W(3, 2), W(4, 3)});
        cp.base_blocks.push_back({W(0, 1), W(1, 2), W(3 * t + 1, 3)});
        cp.base_blocks.push_back({W(7, 1), W(0, 2), W(B(7), 4)});
        cp.base_blocks.push_back({W(0, 1), W(7, 2), W(B(7), 4)});
        cp.base_blocks.push_back({W(0, 1), W(3, 3), W(3 * t + 2, 3)});
        for (int r = 1; r <= 3 * t - 1; ++r)
            if (r != 7) cp.base_blocks.push_back({W(0, 2), W(r, 2), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 2), W(7, 2), W(5, 3)});
        cp.base_blocks.push_back({FX(0), W(0, 3), W(3 * t - 1, 4)});
        cp.base_blocks.push_back({W(0, 2), W(3 * t + 1, 3), W(-1, 3)});
        for (int r = 1; r <= 3 * t - 1; ++r)
            cp.base_blocks.push_back({W(0, 3), W(-B(r), 4), W(-Aa(r), 4)});
        for (int r = 1; r <= t - 1; ++r)
            cp.base_blocks.push_back({W(0, 3), W(r, 3), W(cd.pair_for(r).second + t - 1, 3)});
    }

    for (int i = 0; i < n; ++i) sp.P.push_back(coord_label(i, 1));
    for (int i = 0; i < n; ++i) sp.A.push_back(coord_label(i, 2));
    sp.A.push_back("inf");
    for (int c : {3, 4})
        for (int i = 0; i < n; ++i) sp.U.push_back(coord_label(i, c));
    sp.center = "inf";
    return sp;
}

// the STS(4a-3) over Z_{a-1} x {1,2,3,4} with one fixed point, a = 4 (mod 6)
StarParts build_4mod6(int a) {
    const int t = (a - 4) / 6;
    const int n = a - 1;  // 6t + 3
    StarParts sp;
    auto& cp = sp.cp;
    cp.modulus = n;
    cp.copies = {1, 2, 3, 4};
    cp.fixed = {"inf"};

    auto copy4 = copy4_family(n);
    if (!copy4) throw std::runtime_error("no triple system for the fourth copy at n=" + std::to_string(n));

    const int m24 = a % 24;
    if (m24 == 4 || m24 == 10) {
        PairSequence ab = generate(SeqKind::Skolem, 3 * t + 1, 1, 11);
        auto Aa = [&](int r) { return (long)ab.pair_for(r).first; };
        auto B = [&](int r) { return (long)ab.pair_for(r).second; };
        const long a21 = Aa(2 * t + 1);
        for (int r = 1; r <= 3 * t + 1; ++r)
            if (r != 2 * t + 1) cp.base_blocks.push_back({W(0, 1), W(r, 1), W(B(r), 4)});
        cp.base_blocks.push_back({W(2 * t + 1, 1), W(0, 1), W(a21 - (2 * t + 1), 3)});
        cp.base_blocks.push_back({FX(0), W(0, 1), W(-a21, 2)});
        long ex1 = modn(a21 + (2 * t + 1), n), ex2 = modn(a21 - (2 * t + 1), n);
        for (int r = 1; r <= 6 * t + 2; ++r)
            if (r != ex1 && r != ex2)
                cp.base_blocks.push_back({W(a21 - r, 1), W(0, 2), W(r, 3)});
        cp.base_blocks.push_back({W(0, 1), W(2 * t + 1, 2), W(B(2 * t + 1), 4)});
        cp.base_blocks.push_back({W(0, 1), W(-(2 * t + 1), 2), W(a21, 4)});
        cp.base_blocks.push_back({W(0, 1), W(-a21, 3), W(0, 4)});
        for (int r = 1; r <= 3 * t + 1; ++r)
            if (r != 2 * t + 1) cp.base_blocks.push_back({W(0, 2), W(r, 2), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 2), W(-(2 * t + 1), 2), W(a21 + 2 * t + 1, 3)});
        cp.base_blocks.push_back({W(0, 2), W(0, 3), W(0, 4)});
        cp.base_blocks.push_back({FX(0), W(0, 3), W(B(2 * t + 1), 4)});
        for (int r = 1; r <= 3 * t + 1; ++r)
            if (r != 2 * t + 1) cp.base_blocks.push_back({W(0, 3), W(r, 3), W(B(r), 4)});
        attach_copy4(sp, *copy4);
        cp.base_blocks.push_back({W(0, 3), W(2 * t + 1, 3), W(4 * t + 2, 3)});
    } else {  // a = 16, 22 (mod 24)
        PairSequence ab = generate(SeqKind::Hooked, 3 * t + 1, 1, 11);
        auto Aa = [&](int r) { return (long)ab.pair_for(r).first; };
        auto B = [&](int r) { return (long)ab.pair_for(r).second; };
        const long a21 = Aa(2 * t + 1);
        // choose the smallest i with k and l both nonzero (mod n)
        int i = -1, j = 0;
        long k = 0, lval = 0;
        for (int cand = 1; 2 * cand <= 3 * t + 1; ++cand) {
            int jj = 2 * cand;
            long kk = modn(Aa(cand) + B(jj) + 3 + a21, n);
            long ll = modn(Aa(jj) + B(cand) + 3 + a21, n);
            if (kk != 0 && ll != 0) {
                i = cand;
                j = jj;
                k = kk;
                lval = ll;
                break;
            }
        }
        if (i < 0) throw std::runtime_error("no valid i for the hooked star case");
        for (int r = 1; r <= 3 * t + 1; ++r)
            if (r != j) cp.base_blocks.push_back({W(0, 1), W(r, 1), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 1), W(j, 1), W(2 * k - 1 - a21, 3)});
        cp.base_blocks.push_back({FX(0), W(0, 1), W(-a21 - 3, 2)});
        for (int r = 1; r <= 6 * t + 2; ++r)
            if (r != k && r != lval)
                cp.base_blocks.push_back({W(a21 + 3 - r, 1), W(0, 2), W(2 + r, 3)});
        cp.base_blocks.push_back({W(0, 1), W(B(j) + Aa(i), 2), W(B(j), 4)});
        cp.base_blocks.push_back({W(0, 1), W(Aa(j) + B(i), 2), W(Aa(j), 4)});
        cp.base_blocks.push_back({W(0, 1), W(-a21 - 1, 3), W(-1, 4)});
        for (int r = 1; r <= 3 * t + 1; ++r)
            if (r != i) cp.base_blocks.push_back({W(0, 2), W(-r, 2), W(-B(r), 4)});
        cp.base_blocks.push_back({W(0, 2), W(i, 2), W(2 + k, 3)});
        cp.base_blocks.push_back({FX(0), W(0, 3), W(B(2 * t + 1), 4)});
        cp.base_blocks.push_back({W(0, 2), W(2, 3), W(1, 4)});
        attach_copy4(sp, *copy4);
        for (int r = 1; r <= 3 * t + 1; ++r)
            if (r != 2 * t + 1) cp.base_blocks.push_back({W(0, 3), W(r, 3), W(B(r), 4)});
        cp.base_blocks.push_back({W(0, 3), W(2 * t + 1, 3), W(4 * t + 2, 3)});
    }

    for (int i2 = 0; i2 < n; ++i2) sp.P.push_back(coord_label(i2, 1));
    for (int i2 = 0; i2 < n; ++i2) sp.A.push_back(coord_label(i2, 2));
    sp.A.push_back("inf");
    for (int c : {3, 4})
        for (int i2 = 0; i2 < n; ++i2) sp.U.push_back(coord_label(i2, c));
    sp.center = "inf";
    return sp;
}

// --- repair machinery: Pasch switches restoring unplayability witnesses

struct RepairState {
    TripleSystem ts;
    PointPartition part;
    LabeledGraph graph;
    std::set<Block> immune;  // blocks added by earlier repairs
};

std::vector<PointId> points_missing_ppu(const TripleSystem& ts, const PointPartition& part) {
    std::vector<char> has(ts.v(), 0);
    for (const auto& b : ts.blocks)
        if (classify_block(b, part) == BlockClass::PPU)
            for (PointId x : b.pts)
                if (part.in_U(x)) has[x] = 1;
    std::vector<PointId> out;
    for (int x = 0; x < ts.v(); ++x)
        if (part.in_U(x) && !has[x]) out.push_back(x);
    return out;
}

// applies the switch u,v,z / u,y,w / x,v,w / x,y,z -> u,v,w / u,y,z / x,v,z / x,y,w
void switch_blocks(std::vector<Block>& blocks, const PaschConfiguration& pc) {
    for (const Block& b : pc.blocks()) {
        auto it = std::find(blocks.begin(), blocks.end(), b);
        if (it == blocks.end()) throw std::runtime_error("switch: block missing");
        blocks.erase(it);
    }
    blocks.push_back(Block(pc.u, pc.v, pc.w));
    blocks.push_back(Block(pc.u, pc.y, pc.z));
    blocks.push_back(Block(pc.x, pc.v, pc.z));
    blocks.push_back(Block(pc.x, pc.y, pc.w));
    std::sort(blocks.begin(), blocks.end());
}

// candidate quality: how many unplayable points still lack a PPU block after
// switching; -1 when the candidate is unusable
int try_candidate(RepairState& st, const PaschConfiguration& pc, PointId target,
                  TripleSystem& out_ts) {
    for (const Block& b : pc.blocks())
        if (st.immune.count(b)) return -1;
    // legality of the four new blocks and stability of the available graph
    std::array<Block, 4> added{Block(pc.u, pc.v, pc.w), Block(pc.u, pc.y, pc.z),
                               Block(pc.x, pc.v, pc.z), Block(pc.x, pc.y, pc.w)};
    for (const Block& b : added) {
        BlockClass cls = classify_block(b, st.part);
        if (cls == BlockClass::FORBIDDEN) return -1;
        int na = 0;
        std::array<PointId, 2> apts{};
        for (PointId p : b.pts)
            if (st.part.in_A(p)) {
                if (na < 2) apts[na] = p;
                ++na;
            }
        if (na == 2) {
            int gi = st.graph.index_of(st.ts.points[apts[0]]);
            int gj = st.graph.index_of(st.ts.points[apts[1]]);
            if (gi < 0 || gj < 0) return -1;
            bool edge = st.graph.adjacent(gi, gj);
            PointId third = b.third(apts[0], apts[1]);
            if (edge != st.part.in_P(third)) return -1;
        }
    }
    out_ts = st.ts;
    switch_blocks(out_ts.blocks, pc);
    auto missing = points_missing_ppu(out_ts, st.part);
    for (PointId m : missing)
        if (m == target) return -1;
    return (int)missing.size();
}

// finds a Pasch switch giving `target` a block with two played points
bool repair_point(RepairState& st, PointId target) {
    PairIndex pidx(st.ts);
    std::vector<int> thru;
    for (int bi = 0; bi < (int)st.ts.blocks.size(); ++bi)
        if (st.ts.blocks[bi].contains(target)) thru.push_back(bi);

    int best_score = -1;
    TripleSystem best_ts;
    PaschConfiguration best_pc{};
    for (size_t ai = 0; ai < thru.size(); ++ai)
        for (size_t bi2 = 0; bi2 < thru.size(); ++bi2) {
            if (ai == bi2) continue;
            const Block& Ba = st.ts.blocks[thru[ai]];
            const Block& Bb = st.ts.blocks[thru[bi2]];
            for (PointId v : Ba.pts) {
                if (v == target || !st.part.in_P(v)) continue;
                PointId z = Ba.third(target, v);
                for (PointId w : Bb.pts) {
                    if (w == target || w == v || !st.part.in_P(w)) continue;
                    PointId y = Bb.third(target, w);
                    if (y == z || y == v || z == w) continue;
                    int c = pidx.block_of(v, w);
                    if (c < 0) continue;
                    PointId x = st.ts.blocks[c].third(v, w);
                    if (x == target || x == z || x == y) continue;
                    int d = pidx.block_of(y, z);
                    if (d < 0 || st.ts.blocks[d].third(y, z) != x) continue;
                    PaschConfiguration pc{target, v, z, y, w, x};
                    TripleSystem cand;
                    int score = try_candidate(st, pc, target, cand);
                    if (score < 0) continue;
                    if (best_score < 0 || score < best_score) {
                        best_score = score;
                        best_ts = std::move(cand);
                        best_pc = pc;
                    }
                }
            }
        }
    if (best_score < 0) return false;
    st.ts = std::move(best_ts);
    st.immune.insert(Block(best_pc.u, best_pc.v, best_pc.w));
    st.immune.insert(Block(best_pc.u, best_pc.y, best_pc.z));
    st.immune.insert(Block(best_pc.x, best_pc.v, best_pc.z));
    st.immune.insert(Block(best_pc.x, best_pc.y, best_pc.w));
    return true;
}

bool repair_unplayability(RepairState& st, std::vector<std::string>& log) {
    for (int round = 0; round < 32; ++round) {
        auto missing = points_missing_ppu(st.ts, st.part);
        if (missing.empty()) return true;
        PointId target = missing.front();
        if (!repair_point(st, target)) {
            log.push_back("no pasch switch repairs " + st.ts.points[target]);
            return false;
        }
        log.push_back("switched a pasch to cover " + st.ts.points[target]);
    }
    return false;
}

StarEmbedding finish_star(StarParts sp, MinimalityTag tag) {
    StarEmbedding out;
    out.tag = tag;
    out.presentation = sp.cp;
    out.extra_blocks = sp.extra;
    TripleSystem ts;
    try {
        ts = expand_orbits_unchecked(sp.cp);
        if (!sp.extra.empty()) {
            std::vector<std::array<std::string, 3>> all;
            for (const auto& b : ts.blocks)
                all.push_back({ts.points[b.pts[0]], ts.points[b.pts[1]], ts.points[b.pts[2]]});
            all.insert(all.end(), sp.extra.begin(), sp.extra.end());
            ts = make_triple_system(ts.points, all);
        }
        auto vrep = validate_sts(ts);
        if (!vrep.ok)
            throw std::runtime_error("expansion is not a triple system: " +
                                     (vrep.violations.empty() ? "" : vrep.violations.front()));
    } catch (const std::exception& e) {
        out.search_required = true;
        out.repair_log.push_back(e.what());
        return out;
    }

    RepairState st;
    st.ts = std::move(ts);
    st.part = make_partition(st.ts, sp.P, sp.A, sp.U);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& leaf : sp.A)
        if (leaf != sp.center) edges.emplace_back(sp.center, leaf);
    st.graph = make_graph(sp.A, edges);

    if (!repair_unplayability(st, out.repair_log)) {
        out.search_required = true;
        return out;
    }

    out.cert = {st.ts, st.part, st.graph};
    out.v = st.ts.v();
    auto rep = verify_embedding(out.cert);
    if (!rep.ok) {
        out.search_required = true;
        out.repair_log.insert(out.repair_log.end(), rep.failures.begin(), rep.failures.end());
    }
    return out;
}

}  // namespace

EmbeddingCertificate parse_cert_text(const std::string& text) {
    // the stored tables are revalidated and reverified on every load
    EmbeddingCertificate cert = parse_certificate(text);
    if (!validate_sts(cert.ts).ok) throw std::runtime_error("stored table is not an STS");
    if (!verify_embedding(cert).ok) throw std::runtime_error("stored table fails verification");
    return cert;
}

StarEmbedding embed_star(int a) {
    if (a < 2) throw std::invalid_argument("embed_star: a >= 2 required");
    StarEmbedding out;
    switch (a) {
        case 2: {
            out.cert = embed_complete(2);
            out.v = 7;
            out.tag = MinimalityTag::Minimal;
            return out;
        }
        case 3:
            out.cert = parse_cert_text(kStar3Cert);
            out.v = 13;
            out.tag = MinimalityTag::Minimal;
            return out;
        case 4:
            out.cert = parse_cert_text(kStar4Cert);
            out.v = 19;
            out.tag = MinimalityTag::Minimal;
            return out;
        case 6:
            out.cert = parse_cert_text(kStar6Cert);
            out.v = 19;
            out.tag = MinimalityTag::Minimal;
            return out;
        default: break;
    }

    const int r6 = a % 6;
    if (r6 == 5) {
        const int t = (a - 5) / 6;
        const int o = (t % 4 == 0 || t % 4 == 1) ? 0 : 1;
        PairSequence seq = o == 0 ? generate(SeqKind::Skolem, 3 * t + 1, 1, 11)
                                  : generate(SeqKind::Hooked, 3 * t + 1, 1, 11);
        auto copy4 = copy4_family(6 * t + 3);
        if (!copy4) {
            out.search_required = true;
            out.repair_log.push_back("no triple system for the fourth copy");
            return out;
        }
        return finish_star(build_5mod6(t, seq, o, *copy4), MinimalityTag::Minimal);
    }
    if (r6 == 0 || r6 == 4) {
        MinimalityTag tag = r6 == 4 ? MinimalityTag::Minimal : MinimalityTag::Next;
        try {
            StarParts sp = r6 == 0 ? build_0mod6(a) : build_4mod6(a);
            return finish_star(std::move(sp), tag);
        } catch (const std::exception& e) {
            out.tag = tag;
            out.search_required = true;
            out.repair_log.push_back(e.what());
            return out;
        }
    }
    // a = 1, 2, 3 (mod 6)
    const int t = (a - r6) / 6;
    MinimalityTag tag = r6 == 3   ? MinimalityTag::Minimal
                        : r6 == 2 ? MinimalityTag::Next
                                  : MinimalityTag::Third;
    if (t < 1) {
        out.tag = tag;
        out.search_required = true;
        out.repair_log.push_back("no cyclic presentation below a=7");
        return out;
    }
    const int o = (t % 4 == 0 || t % 4 == 3) ? 0 : 1;
    PairSequence seq;
    try {
        if (o == 0)
            seq = special_skolem(3 * t);
        else
            seq = 3 * t >= 6 ? special_hooked(3 * t) : generate(SeqKind::Hooked, 3 * t, 1, 11);
    } catch (const std::exception& e) {
        out.tag = tag;
        out.search_required = true;
        out.repair_log.push_back(e.what());
        return out;
    }
    auto copy4 = copy4_family(6 * t + 1);
    if (!copy4) {
        out.tag = tag;
        out.search_required = true;
        out.repair_log.push_back("no triple system for the fourth copy");
        return out;
    }
    StarParts sp = build_24t7(t, seq, o, *copy4);
    // partition adjustments per residue class
    if (r6 == 2) {
        sp.U.push_back("inf_3");
    } else if (r6 == 3) {
        sp.A.push_back("inf_3");
    } else {
        sp.A.erase(std::find(sp.A.begin(), sp.A.end(), coord_label(0, 2)));
        sp.U.push_back(coord_label(0, 2));
        sp.U.push_back("inf_3");
    }
    return finish_star(std::move(sp), tag);
}

std::optional<EmbeddingCertificate> pasch_transfer(const EmbeddingCertificate& cert) {
    const TripleSystem& ts = cert.ts;
    const PointPartition& part = cert.partition;
    PairIndex pidx(ts);
    std::vector<std::vector<int>> thru(ts.v());
    for (int bi = 0; bi < (int)ts.blocks.size(); ++bi)
        for (PointId x : ts.blocks[bi].pts) thru[x].push_back(bi);

    for (PointId u = 0; u < ts.v(); ++u) {
        if (!part.in_A(u)) continue;
        const auto& bs = thru[u];
        for (size_t i = 0; i < bs.size(); ++i)
            for (size_t j = 0; j < bs.size(); ++j) {
                if (i == j) continue;
                const Block& Ba = ts.blocks[bs[i]];
                const Block& Bb = ts.blocks[bs[j]];
                for (PointId v : Ba.pts) {
                    if (v == u || !part.in_P(v)) continue;
                    PointId z = Ba.third(u, v);
                    if (!part.in_U(z)) continue;
                    for (PointId w : Bb.pts) {
                        if (w == u || w == v || !part.in_P(w)) continue;
                        PointId y = Bb.third(u, w);
                        if (!part.in_U(y) || y == z) continue;
                        int c = pidx.block_of(v, w);
                        if (c < 0) continue;
                        PointId x = ts.blocks[c].third(v, w);
                        if (!part.in_U(x) || x == y || x == z) continue;
                        int d = pidx.block_of(y, z);
                        if (d < 0 || ts.blocks[d].third(y, z) != x) continue;
                        // switch and move u to U
                        PaschConfiguration pc{u, v, z, y, w, x};
                        EmbeddingCertificate next;
                        next.ts = pasch_switch(ts, pc);
                        next.partition = part;
                        next.partition.cls[u] = PointClass::Unplayable;
                        next.partition.a -= 1;
                        next.partition.u += 1;
                        std::vector<std::string> verts;
                        std::vector<std::pair<std::string, std::string>> edges;
                        const std::string& ulabel = ts.points[u];
                        for (const auto& vert : cert.graph.vertices)
                            if (vert != ulabel) verts.push_back(vert);
                        for (auto [gi, gj] : cert.graph.edges) {
                            if (cert.graph.vertices[gi] == ulabel ||
                                cert.graph.vertices[gj] == ulabel)
                                continue;
                            edges.emplace_back(cert.graph.vertices[gi],
                                               cert.graph.vertices[gj]);
                        }
                        next.graph = make_graph(verts, edges);
                        if (verify_embedding(next).ok) return next;
                    }
                }
            }
    }
    return std::nullopt;
}

}  // namespace nofil
