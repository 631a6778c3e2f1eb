#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nofil/core.hpp"

// The game engine: legal play, state evolution, the available hypergraph,
// exhaustive outcome computation and graph harvesting over full game trees.

namespace nofil {

struct GameState {
    std::shared_ptr<const TripleSystem> ts;
    std::vector<PointId> played;        // in order of play
    std::vector<PointClass> cls;        // derived partition of all points
    // hyperedges of the available hypergraph, each of size 2 or 3
    std::vector<std::vector<PointId>> hyperedges;

    int p() const { return (int)played.size(); }
};

GameState new_game(const TripleSystem& ts);
GameState new_game(std::shared_ptr<const TripleSystem> ts);

std::vector<std::string> legal_moves(const GameState& s);

// Throws std::invalid_argument naming the blocking block on an illegal move.
GameState play(const GameState& s, const std::string& point);

// The available hypergraph as a graph when every hyperedge has size <= 2.
std::optional<LabeledGraph> state_graph(const GameState& s);

enum class Winner { FirstPlayerWins, SecondPlayerWins };

struct Outcome {
    Winner winner;
    std::vector<std::string> principal_variation;
    long states = 0;
};

// Memoized full-tree search; positions are identified by their played set.
Outcome outcome(const TripleSystem& ts, int solver_cap = 15);

struct HarvestLimits {
    long max_nodes = 10'000'000;
    int max_graph_vertices = 12;
};

struct CatalogEntry {
    LabeledGraph representative;
    std::vector<std::string> witness;  // a played set reaching the graph
    long count = 0;                    // distinct played sets reaching it
};

struct GraphCatalog {
    std::map<std::string, CatalogEntry> by_key;  // canonical form -> entry
    bool complete = true;
    long nodes = 0;

    void merge(const GraphCatalog& other);
};

// Depth-first traversal of all reachable played sets, recording every state
// whose available hypergraph is a graph. jobs > 1 splits the first ply
// across threads over a shared visited table.
GraphCatalog harvest_graphs(const TripleSystem& ts, const HarvestLimits& limits = {},
                            int jobs = 1);

struct ContainsResult {
    bool found = false;
    std::vector<std::string> witness;
    bool complete = true;  // NotFound is conclusive only when true
};

ContainsResult contains_graph(const TripleSystem& ts, const LabeledGraph& g,
                              const HarvestLimits& limits = {});

// line format: canonical_key n_vertices n_edges witness points...
std::string write_catalog(const GraphCatalog& catalog);

}  // namespace nofil
