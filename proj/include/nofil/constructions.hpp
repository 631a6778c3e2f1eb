#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nofil/core.hpp"

// Direct embeddings: complete graphs at their minimal orders, stars via the
// four-copy cyclic presentations with Pasch-switch repairs, and the
// supporting matching decompositions and difference families.

namespace nofil {

struct CyclicPoint {
    bool is_fixed = false;
    int coord = 0;  // residue when not fixed
    int copy = 0;   // copy subscript, or fixed-point index when fixed
};

struct CyclicPresentation {
    int modulus = 1;
    std::vector<int> copies;            // copy subscripts, e.g. {1,2,3,4}
    std::vector<std::string> fixed;     // fixed-point labels
    std::vector<std::array<CyclicPoint, 3>> base_blocks;
};

std::string cyclic_label(const CyclicPresentation& cp, const CyclicPoint& pt);

// Applies g(i_j) = (i+g)_j, g(fixed) = fixed for all g; duplicates collapse
// (short orbits). Throws ConstructionDefect-style std::runtime_error when the
// expansion fails validation.
TripleSystem expand_orbits(const CyclicPresentation& cp);
TripleSystem expand_orbits_unchecked(const CyclicPresentation& cp);

struct MatchingDecomposition {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::pair<int, int>>> classes;
};

// 2l+1 matchings decomposing K_{2l} on p{i}_{j}: class 2i+j misses exactly
// part i, the last class is the partition into parts.
MatchingDecomposition decompose_P_matchings(int l);

// Classes over Z_a (a even): class 2i is the perfect matching around i,
// class 2i+1 the near matching missing i and i + a/2.
MatchingDecomposition decompose_A_matchings(int a);

// m odd: m classes, class i a perfect matching on Z_m minus {i}.
MatchingDecomposition near_one_factorization(int m);

EmbeddingCertificate embed_complete(int a);

// Difference-method base blocks over Z_v whose orbit expansion is an STS(v);
// includes the short-orbit block {0, 2t+1, 4t+2} when v = 6t+3. Empty when
// no presentation exists (v = 9 has no cyclic system).
std::optional<std::vector<std::array<long, 3>>> cyclic_sts_base_blocks(int v);

enum class MinimalityTag { Minimal, Next, Third };
const char* to_string(MinimalityTag t);

struct StarEmbedding {
    EmbeddingCertificate cert;
    int v = 0;
    MinimalityTag tag = MinimalityTag::Minimal;
    bool search_required = false;  // construction failed; certificate absent
    std::optional<CyclicPresentation> presentation;
    // blocks outside the group action (only when the fourth copy has no
    // cyclic system)
    std::vector<std::array<std::string, 3>> extra_blocks;
    std::vector<std::string> repair_log;
};

StarEmbedding embed_star(int a);

// Finds a Pasch with two played, one available and three unplayable points;
// switching it transfers the available point to U and deletes its edges.
std::optional<EmbeddingCertificate> pasch_transfer(const EmbeddingCertificate& cert);

}  // namespace nofil
