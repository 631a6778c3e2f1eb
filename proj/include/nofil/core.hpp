#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

// Fundamental types for triple systems, point partitions, block
// classification, embedding verification and Pasch switching.

namespace nofil {

using PointId = int;

// A block is a 3-subset of points, stored sorted so set equality is
// plain equality.
struct Block {
    std::array<PointId, 3> pts{};

    Block() = default;
    Block(PointId a, PointId b, PointId c);

    bool contains(PointId x) const { return pts[0] == x || pts[1] == x || pts[2] == x; }
    PointId third(PointId a, PointId b) const;
    bool operator==(const Block&) const = default;
    auto operator<=>(const Block&) const = default;
};

struct TripleSystem {
    std::vector<std::string> points;  // display labels, unique
    std::vector<Block> blocks;        // sorted, no duplicates

    int v() const { return static_cast<int>(points.size()); }
    PointId index_of(const std::string& label) const;
    const std::string& label(PointId x) const { return points[x]; }
};

// Builds a TripleSystem from labels; rejects duplicate labels, unknown
// labels in blocks and blocks with repeated points. Duplicate blocks
// (as sets) collapse.
TripleSystem make_triple_system(std::vector<std::string> point_labels,
                                const std::vector<std::array<std::string, 3>>& block_labels);

// Pair -> containing block lookup. -1 where no block covers the pair.
// Multiply covered pairs keep the first block; validate_sts reports them.
class PairIndex {
public:
    explicit PairIndex(const TripleSystem& ts);
    int block_of(PointId a, PointId b) const { return at(a, b); }

private:
    int n_ = 0;
    std::vector<int> tab_;
    int& at(PointId a, PointId b) { return tab_[a * n_ + b]; }
    int at(PointId a, PointId b) const { return tab_[a * n_ + b]; }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationReport validate_sts(const TripleSystem& ts);

enum class PointClass : uint8_t { Played, Available, Unplayable };

struct PointPartition {
    std::vector<PointClass> cls;  // indexed by PointId

    int p = 0, a = 0, u = 0;

    bool in_P(PointId x) const { return cls[x] == PointClass::Played; }
    bool in_A(PointId x) const { return cls[x] == PointClass::Available; }
    bool in_U(PointId x) const { return cls[x] == PointClass::Unplayable; }
};

PointPartition make_partition(const TripleSystem& ts,
                              const std::vector<std::string>& P,
                              const std::vector<std::string>& A,
                              const std::vector<std::string>& U);

enum class BlockClass : uint8_t { PPU, PAA, PAU, PUU, AAU, AUU, UUU, FORBIDDEN };

const char* to_string(BlockClass c);

struct BlockClassCounts {
    // indexed by BlockClass; FORBIDDEN bucket collects PPP/PPA/AAA
    std::array<long, 8> n{};
    long operator[](BlockClass c) const { return n[static_cast<int>(c)]; }
};

struct Classification {
    std::vector<BlockClass> per_block;
    BlockClassCounts counts;
};

BlockClass classify_block(const Block& b, const PointPartition& part);
Classification classify_blocks(const TripleSystem& ts, const PointPartition& part);

struct LabeledGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;  // (i,j) with i<j, sorted, unique

    int n() const { return static_cast<int>(vertices.size()); }
    long e() const { return static_cast<long>(edges.size()); }
    int index_of(const std::string& label) const;
    bool adjacent(int i, int j) const;
    std::vector<int> degrees() const;
};

LabeledGraph make_graph(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges);

enum class GraphFamily { Complete, Star, Empty, Path, Cycle };

// Standard family on vertices "0".."a-1"; the star's center is vertex 0.
LabeledGraph graph_family(GraphFamily family, int a);

std::optional<GraphFamily> parse_family(const std::string& name);
const char* to_string(GraphFamily f);

struct EmbeddingCertificate {
    TripleSystem ts;
    PointPartition partition;
    LabeledGraph graph;  // vertex set must equal the A labels
};

struct VerificationReport {
    bool ok = true;
    bool structural_error = false;  // vertex set != A; not a mere failure
    std::vector<std::string> failures;
};

VerificationReport verify_embedding(const EmbeddingCertificate& cert);

struct InducedResult {
    enum class Status { Graph, NotAGraph, IllegalPosition } status;
    std::optional<EmbeddingCertificate> cert;
    std::string detail;
};

// Derives the partition and available graph from a played set P.
InducedResult induced_certificate(const TripleSystem& ts, const std::vector<std::string>& P);

struct PaschConfiguration {
    // blocks {u,v,z},{u,y,w},{x,v,w},{x,y,z}
    PointId u, v, z, y, w, x;
    std::array<Block, 4> blocks() const;
};

std::vector<PaschConfiguration> find_paschs(const TripleSystem& ts);

// Replaces {u,v,z},{u,y,w},{x,v,w},{x,y,z} by {u,v,w},{u,y,z},{x,v,z},{x,y,w}.
TripleSystem pasch_switch(const TripleSystem& ts, const PaschConfiguration& pc);

// --- canonical forms and edge chromatic numbers (canonical.cpp / chromatic.cpp)

inline constexpr int kCanonicalMaxVertices = 12;

// Equal strings iff isomorphic; throws std::invalid_argument above the cap.
std::string canonical_form(const LabeledGraph& g, int max_vertices = kCanonicalMaxVertices);

// Exact edge chromatic number.
int chromatic_index(const LabeledGraph& g);

// Exact decision procedure: proper edge colouring with at most k colours,
// classes returned as edge lists. Empty optional = impossible.
std::optional<std::vector<std::vector<std::pair<int, int>>>>
edge_colouring(const LabeledGraph& g, int k);

}  // namespace nofil
