#include "nofil/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nofil {

Block::Block(PointId a, PointId b, PointId c) : pts{a, b, c} {
    std::sort(pts.begin(), pts.end());
    if (pts[0] == pts[1] || pts[1] == pts[2])
        throw std::invalid_argument("block with repeated point");
}

PointId Block::third(PointId a, PointId b) const {
    for (PointId x : pts)
        if (x != a && x != b) return x;
    return -1;
}

PointId TripleSystem::index_of(const std::string& label) const {
    for (int i = 0; i < v(); ++i)
        if (points[i] == label) return i;
    return -1;
}

TripleSystem make_triple_system(std::vector<std::string> point_labels,
                                const std::vector<std::array<std::string, 3>>& block_labels) {
    TripleSystem ts;
    ts.points = std::move(point_labels);
    std::unordered_map<std::string, PointId> idx;
    for (int i = 0; i < ts.v(); ++i) {
        if (ts.points[i].empty()) throw std::invalid_argument("empty point label");
        if (!idx.emplace(ts.points[i], i).second)
            throw std::invalid_argument("duplicate point label: " + ts.points[i]);
    }
    std::set<Block> seen;
    for (const auto& bl : block_labels) {
        std::array<PointId, 3> p{};
        for (int k = 0; k < 3; ++k) {
            auto it = idx.find(bl[k]);
            if (it == idx.end()) throw std::invalid_argument("unknown point in block: " + bl[k]);
            p[k] = it->second;
        }
        Block b(p[0], p[1], p[2]);
        if (seen.insert(b).second) ts.blocks.push_back(b);
    }
    std::sort(ts.blocks.begin(), ts.blocks.end());
    return ts;
}

PairIndex::PairIndex(const TripleSystem& ts) : n_(ts.v()), tab_(size_t(n_) * n_, -1) {
    for (int bi = 0; bi < (int)ts.blocks.size(); ++bi) {
        const auto& b = ts.blocks[bi].pts;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                if (at(b[i], b[j]) < 0) {
                    at(b[i], b[j]) = bi;
                    at(b[j], b[i]) = bi;
                }
            }
    }
}

ValidationReport validate_sts(const TripleSystem& ts) {
    ValidationReport rep;
    auto flag = [&rep](std::string s) {
        rep.ok = false;
        if (rep.violations.size() < 50) rep.violations.push_back(std::move(s));
    };
    const int v = ts.v();
    if (v < 3) flag("fewer than 3 points");
    if (v % 6 != 1 && v % 6 != 3) flag("v = " + std::to_string(v) + " not 1,3 (mod 6)");
    const long expect = long(v) * (v - 1) / 6;
    if ((long)ts.blocks.size() != expect)
        flag("block count " + std::to_string(ts.blocks.size()) + " != v(v-1)/6 = " +
             std::to_string(expect));
    std::vector<int> cover(size_t(v) * v, 0);
    for (const auto& b : ts.blocks)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) cover[b.pts[i] * v + b.pts[j]]++;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            int c = cover[i * v + j];
            if (c != 1)
                flag("pair {" + ts.points[i] + "," + ts.points[j] + "} covered " +
                     std::to_string(c) + " times");
        }
    return rep;
}

PointPartition make_partition(const TripleSystem& ts, const std::vector<std::string>& P,
                              const std::vector<std::string>& A,
                              const std::vector<std::string>& U) {
    PointPartition part;
    part.cls.assign(ts.v(), PointClass::Available);
    std::vector<char> seen(ts.v(), 0);
    auto put = [&](const std::vector<std::string>& grp, PointClass c) {
        for (const auto& lbl : grp) {
            PointId x = ts.index_of(lbl);
            if (x < 0) throw std::invalid_argument("partition label not in system: " + lbl);
            if (seen[x]) throw std::invalid_argument("point in two partition classes: " + lbl);
            seen[x] = 1;
            part.cls[x] = c;
        }
    };
    put(P, PointClass::Played);
    put(A, PointClass::Available);
    put(U, PointClass::Unplayable);
    for (int x = 0; x < ts.v(); ++x)
        if (!seen[x]) throw std::invalid_argument("point not covered by partition: " + ts.points[x]);
    part.p = (int)P.size();
    part.a = (int)A.size();
    part.u = (int)U.size();
    return part;
}

BlockClass classify_block(const Block& b, const PointPartition& part) {
    int np = 0, na = 0, nu = 0;
    for (PointId x : b.pts) {
        switch (part.cls[x]) {
            case PointClass::Played: ++np; break;
            case PointClass::Available: ++na; break;
            case PointClass::Unplayable: ++nu; break;
        }
    }
    if (np == 3 || (np == 2 && na == 1) || na == 3) return BlockClass::FORBIDDEN;
    if (np == 2) return BlockClass::PPU;
    if (np == 1 && na == 2) return BlockClass::PAA;
    if (np == 1 && na == 1) return BlockClass::PAU;
    if (np == 1) return BlockClass::PUU;
    if (na == 2) return BlockClass::AAU;
    if (na == 1) return BlockClass::AUU;
    return BlockClass::UUU;
}

Classification classify_blocks(const TripleSystem& ts, const PointPartition& part) {
    if ((int)part.cls.size() != ts.v())
        throw std::invalid_argument("partition size mismatch");
    Classification cl;
    cl.per_block.reserve(ts.blocks.size());
    for (const auto& b : ts.blocks) {
        BlockClass c = classify_block(b, part);
        cl.per_block.push_back(c);
        cl.counts.n[static_cast<int>(c)]++;
    }
    return cl;
}

const char* to_string(BlockClass c) {
    switch (c) {
        case BlockClass::PPU: return "PPU";
        case BlockClass::PAA: return "PAA";
        case BlockClass::PAU: return "PAU";
        case BlockClass::PUU: return "PUU";
        case BlockClass::AAU: return "AAU";
        case BlockClass::AUU: return "AUU";
        case BlockClass::UUU: return "UUU";
        default: return "FORBIDDEN";
    }
}

int LabeledGraph::index_of(const std::string& label) const {
    for (int i = 0; i < n(); ++i)
        if (vertices[i] == label) return i;
    return -1;
}

bool LabeledGraph::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<int> LabeledGraph::degrees() const {
    std::vector<int> d(n(), 0);
    for (auto [i, j] : edges) {
        d[i]++;
        d[j]++;
    }
    return d;
}

LabeledGraph make_graph(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    LabeledGraph g;
    g.vertices = std::move(vertices);
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < g.n(); ++i)
        if (!idx.emplace(g.vertices[i], i).second)
            throw std::invalid_argument("duplicate vertex label: " + g.vertices[i]);
    std::set<std::pair<int, int>> es;
    for (const auto& [a, b] : edges) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end())
            throw std::invalid_argument("edge references unknown vertex");
        int i = ia->second, j = ib->second;
        if (i == j) throw std::invalid_argument("loop edge at " + a);
        if (i > j) std::swap(i, j);
        es.emplace(i, j);
    }
    g.edges.assign(es.begin(), es.end());
    return g;
}

LabeledGraph graph_family(GraphFamily family, int a) {
    if (a < 1) throw std::invalid_argument("family size must be >= 1");
    if (family == GraphFamily::Cycle && a < 3)
        throw std::invalid_argument("cycle requires a >= 3");
    std::vector<std::string> vs;
    vs.reserve(a);
    for (int i = 0; i < a; ++i) vs.push_back(std::to_string(i));
    LabeledGraph g;
    g.vertices = std::move(vs);
    switch (family) {
        case GraphFamily::Complete:
            for (int i = 0; i < a; ++i)
                for (int j = i + 1; j < a; ++j) g.edges.emplace_back(i, j);
            break;
        case GraphFamily::Star:
            for (int j = 1; j < a; ++j) g.edges.emplace_back(0, j);
            break;
        case GraphFamily::Empty: break;
        case GraphFamily::Path:
            for (int i = 0; i + 1 < a; ++i) g.edges.emplace_back(i, i + 1);
            break;
        case GraphFamily::Cycle:
            for (int i = 0; i + 1 < a; ++i) g.edges.emplace_back(i, i + 1);
            g.edges.emplace_back(0, a - 1);
            break;
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::optional<GraphFamily> parse_family(const std::string& name) {
    if (name == "complete") return GraphFamily::Complete;
    if (name == "star") return GraphFamily::Star;
    if (name == "empty") return GraphFamily::Empty;
    if (name == "path") return GraphFamily::Path;
    if (name == "cycle") return GraphFamily::Cycle;
    return std::nullopt;
}

const char* to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::Complete: return "complete";
        case GraphFamily::Star: return "star";
        case GraphFamily::Empty: return "empty";
        case GraphFamily::Path: return "path";
        case GraphFamily::Cycle: return "cycle";
    }
    return "?";
}

VerificationReport verify_embedding(const EmbeddingCertificate& cert) {
    VerificationReport rep;
    const TripleSystem& ts = cert.ts;
    const PointPartition& part = cert.partition;
    auto fail = [&rep](std::string s) {
        rep.ok = false;
        if (rep.failures.size() < 50) rep.failures.push_back(std::move(s));
    };

    // structural: graph vertex set must equal A
    std::set<std::string> a_set, v_set(cert.graph.vertices.begin(), cert.graph.vertices.end());
    for (int x = 0; x < ts.v(); ++x)
        if (part.in_A(x)) a_set.insert(ts.points[x]);
    if (a_set != v_set) {
        rep.ok = false;
        rep.structural_error = true;
        rep.failures.push_back("graph vertex set differs from A");
        return rep;
    }

    Classification cl = classify_blocks(ts, part);
    for (size_t i = 0; i < cl.per_block.size(); ++i)
        if (cl.per_block[i] == BlockClass::FORBIDDEN) {
            const auto& b = ts.blocks[i];
            fail("forbidden block {" + ts.points[b.pts[0]] + "," + ts.points[b.pts[1]] + "," +
                 ts.points[b.pts[2]] + "}");
        }

    // (ii) every U point on a PPU block
    std::vector<char> has_ppu(ts.v(), 0);
    for (size_t i = 0; i < cl.per_block.size(); ++i)
        if (cl.per_block[i] == BlockClass::PPU)
            for (PointId x : ts.blocks[i].pts)
                if (part.in_U(x)) has_ppu[x] = 1;
    for (int x = 0; x < ts.v(); ++x)
        if (part.in_U(x) && !has_ppu[x])
            fail("unplayable point " + ts.points[x] + " on no PPU block");

    // (iii)/(iv) edges and non-edges within A
    PairIndex pidx(ts);
    const auto& g = cert.graph;
    std::vector<PointId> gid(g.n());
    for (int i = 0; i < g.n(); ++i) gid[i] = ts.index_of(g.vertices[i]);
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            int bi = pidx.block_of(gid[i], gid[j]);
            if (bi < 0) {
                fail("pair {" + g.vertices[i] + "," + g.vertices[j] + "} uncovered");
                continue;
            }
            PointId t = ts.blocks[bi].third(gid[i], gid[j]);
            if (g.adjacent(i, j)) {
                if (!part.in_P(t))
                    fail("edge {" + g.vertices[i] + "," + g.vertices[j] +
                         "} not witnessed by a played point");
            } else {
                if (!part.in_U(t))
                    fail("non-edge {" + g.vertices[i] + "," + g.vertices[j] +
                         "} not witnessed by an unplayable point");
            }
        }
    return rep;
}

InducedResult induced_certificate(const TripleSystem& ts, const std::vector<std::string>& P) {
    std::vector<char> played(ts.v(), 0);
    for (const auto& lbl : P) {
        PointId x = ts.index_of(lbl);
        if (x < 0) throw std::invalid_argument("unknown point: " + lbl);
        played[x] = 1;
    }
    for (const auto& b : ts.blocks) {
        if (played[b.pts[0]] && played[b.pts[1]] && played[b.pts[2]])
            return {InducedResult::Status::IllegalPosition, std::nullopt,
                    "P contains the full block {" + ts.points[b.pts[0]] + "," +
                        ts.points[b.pts[1]] + "," + ts.points[b.pts[2]] + "}"};
    }
    std::vector<char> unplayable(ts.v(), 0);
    for (const auto& b : ts.blocks) {
        int np = played[b.pts[0]] + played[b.pts[1]] + played[b.pts[2]];
        if (np == 2)
            for (PointId x : b.pts)
                if (!played[x]) unplayable[x] = 1;
    }
    std::vector<std::string> a_labels, u_labels;
    for (int x = 0; x < ts.v(); ++x) {
        if (played[x]) continue;
        (unplayable[x] ? u_labels : a_labels).push_back(ts.points[x]);
    }
    // hyperedges: blocks without unplayable points, played points removed
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& b : ts.blocks) {
        bool hasU = false;
        int np = 0;
        for (PointId x : b.pts) {
            if (unplayable[x]) hasU = true;
            if (played[x]) ++np;
        }
        if (hasU) continue;
        if (np == 0)
            return {InducedResult::Status::NotAGraph, std::nullopt,
                    "size-3 hyperedge {" + ts.points[b.pts[0]] + "," + ts.points[b.pts[1]] + "," +
                        ts.points[b.pts[2]] + "} survives"};
        if (np == 1) {
            std::vector<std::string> rest;
            for (PointId x : b.pts)
                if (!played[x]) rest.push_back(ts.points[x]);
            edges.emplace_back(rest[0], rest[1]);
        }
    }
    EmbeddingCertificate cert;
    cert.ts = ts;
    cert.partition = make_partition(ts, P, a_labels, u_labels);
    cert.graph = make_graph(a_labels, edges);
    return {InducedResult::Status::Graph, std::move(cert), ""};
}

std::array<Block, 4> PaschConfiguration::blocks() const {
    return {Block(u, v, z), Block(u, y, w), Block(x, v, w), Block(x, y, z)};
}

std::vector<PaschConfiguration> find_paschs(const TripleSystem& ts) {
    PairIndex pidx(ts);
    std::vector<PaschConfiguration> out;
    std::set<std::array<int, 4>> seen;  // sorted block-id quadruples
    const int nb = (int)ts.blocks.size();

    // blocks through each point
    std::vector<std::vector<int>> thru(ts.v());
    for (int bi = 0; bi < nb; ++bi)
        for (PointId x : ts.blocks[bi].pts) thru[x].push_back(bi);

    for (PointId u = 0; u < ts.v(); ++u) {
        const auto& bs = thru[u];
        for (size_t i = 0; i < bs.size(); ++i)
            for (size_t j = i + 1; j < bs.size(); ++j) {
                const Block& b1 = ts.blocks[bs[i]];
                const Block& b2 = ts.blocks[bs[j]];
                PointId o1[2], o2[2];
                int k = 0;
                for (PointId p : b1.pts)
                    if (p != u) o1[k++] = p;
                k = 0;
                for (PointId p : b2.pts)
                    if (p != u) o2[k++] = p;
                // b1 = {u,v,z}, b2 = {u,y,w}; try the two pairings
                for (int vi = 0; vi < 2; ++vi)
                    for (int yi = 0; yi < 2; ++yi) {
                        PointId v = o1[vi], z = o1[1 - vi];
                        PointId y = o2[yi], w = o2[1 - yi];
                        int b3 = pidx.block_of(v, w);
                        if (b3 < 0) continue;
                        PointId x = ts.blocks[b3].third(v, w);
                        if (x == u || x == z || x == y || x < 0) continue;
                        int b4 = pidx.block_of(y, z);
                        if (b4 < 0 || ts.blocks[b4].third(y, z) != x) continue;
                        std::array<int, 4> ids{bs[i], bs[j], b3, b4};
                        std::sort(ids.begin(), ids.end());
                        if (seen.insert(ids).second)
                            out.push_back({u, v, z, y, w, x});
                    }
            }
    }
    return out;
}

TripleSystem pasch_switch(const TripleSystem& ts, const PaschConfiguration& pc) {
    TripleSystem out = ts;
    auto old_blocks = pc.blocks();
    for (const Block& b : old_blocks) {
        auto it = std::find(out.blocks.begin(), out.blocks.end(), b);
        if (it == out.blocks.end())
            throw std::invalid_argument("pasch block not present in system");
        out.blocks.erase(it);
    }
    out.blocks.push_back(Block(pc.u, pc.v, pc.w));
    out.blocks.push_back(Block(pc.u, pc.y, pc.z));
    out.blocks.push_back(Block(pc.x, pc.v, pc.z));
    out.blocks.push_back(Block(pc.x, pc.y, pc.w));
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

}  // namespace nofil
