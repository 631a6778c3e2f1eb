#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nofil/bounds.hpp"
#include "nofil/core.hpp"
#include "nofil/game.hpp"

// Randomized discovery: hill-climb system generation, frozen-block
// completion, equitable edge colourings and the minimal-embedding driver.

namespace nofil {

enum class SearchPriority { LargeP, LargeU };

struct SearchConfig {
    uint64_t seed = 1;
    long max_iterations = 50'000;  // hill-climb steps per attempt
    int restarts = 20;
    int assignment_retries = 8;  // colour-class-to-point shuffles per row
    SearchPriority priority = SearchPriority::LargeP;
    int jobs = 1;
};

// Stinson-style hill climb; deterministic for a fixed seed.
std::optional<TripleSystem> hillclimb_sts(int v, const SearchConfig& cfg);

// k matchings covering E(g) with sizes differing by at most one; requires
// k >= chi'(g). All classes are nonempty when k <= |E(g)|.
std::vector<std::vector<std::pair<int, int>>> equitable_edge_colouring(const LabeledGraph& g,
                                                                       int k);

struct SeedTriples {
    std::vector<std::string> P, A, U;
    std::vector<std::array<std::string, 3>> ppu, paa, aau;
    LabeledGraph graph;

    std::vector<std::array<std::string, 3>> all() const;
};

// Freezes the unplayability, edge and non-edge witnesses from equitable
// colourings of K_p, E(G) and the complement of G.
SeedTriples build_seed_triples(const LabeledGraph& g, int p, int u, const SearchConfig& cfg);

// Hill climb completing the frozen triples to a full system; the frozen
// blocks are never moved.
std::optional<TripleSystem> hillclimb_complete(const SeedTriples& seed, int v,
                                               const SearchConfig& cfg);

struct AttemptRecord {
    int v = 0, p = 0, u = 0, attempt = 0;
    std::string result;  // ok | fail | blocked
    long millis = 0;
};

struct SearchResult {
    std::optional<EmbeddingCertificate> cert;
    int v = 0;
    std::vector<AttemptRecord> log;
};

// Walks admissible rows from the smallest v upward, seeding and completing;
// rows whose census forces a nonexistent subsystem are logged and skipped.
SearchResult search_min_embedding(const LabeledGraph& g, int v_max, const SearchConfig& cfg);

// Independent hill-climbed systems, harvested and merged.
GraphCatalog sample_and_harvest(int v, int n_samples, const SearchConfig& cfg,
                                const HarvestLimits& limits = {});

std::string format_attempt_log(const std::vector<AttemptRecord>& log);

}  // namespace nofil
