#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nofil/constructions.hpp"
#include "nofil/game.hpp"
#include "test_helpers.hpp"

using namespace nofil;
using nofil::testing::fano;
using nofil::testing::sts9;

namespace {

std::set<std::string> to_set(const std::vector<std::string>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("new game on the STS(9) has 12 size-3 hyperedges and 9 legal moves") {
    auto s = new_game(sts9());
    CHECK(s.hyperedges.size() == 12);
    for (const auto& h : s.hyperedges) CHECK(h.size() == 3);
    CHECK(legal_moves(s).size() == 9);
    CHECK_FALSE(state_graph(s));
}

TEST_CASE("Fano opening has 7 hyperedges") {
    CHECK(new_game(fano()).hyperedges.size() == 7);
}

TEST_CASE("the scripted line 1,2,6,4 reproduces the example game") {
    auto s = new_game(sts9());
    s = play(s, "1");
    CHECK(legal_moves(s).size() == 8);

    s = play(s, "2");
    CHECK(to_set(legal_moves(s)) == std::set<std::string>{"4", "5", "6", "7", "8", "9"});
    CHECK(s.cls[s.ts->index_of("3")] == PointClass::Unplayable);
    CHECK_THROWS_WITH_AS(play(s, "3"), doctest::Contains("block"), std::invalid_argument);

    s = play(s, "6");
    CHECK(to_set(legal_moves(s)) == std::set<std::string>{"4", "5", "9"});
    auto g = state_graph(s);
    REQUIRE(g);
    CHECK(g->n() == 3);
    CHECK(g->e() == 3);  // the triangle 45, 59, 49
    CHECK(g->adjacent(g->index_of("4"), g->index_of("5")));
    CHECK(g->adjacent(g->index_of("5"), g->index_of("9")));
    CHECK(g->adjacent(g->index_of("4"), g->index_of("9")));

    s = play(s, "4");
    CHECK(legal_moves(s).empty());
    CHECK(to_set({s.ts->points[s.played[0]], s.ts->points[s.played[1]],
                  s.ts->points[s.played[2]], s.ts->points[s.played[3]]}) ==
          std::set<std::string>{"1", "2", "6", "4"});
}

TEST_CASE("unplayability is monotone along a line of play") {
    auto s = new_game(sts9());
    std::set<std::string> prev_u;
    for (const char* mv : {"1", "2", "6", "4"}) {
        s = play(s, mv);
        std::set<std::string> u;
        for (int x = 0; x < s.ts->v(); ++x)
            if (s.cls[x] == PointClass::Unplayable) u.insert(s.ts->points[x]);
        for (const auto& p : prev_u) CHECK(u.count(p));
        prev_u = u;
    }
}

TEST_CASE("outcome: the unique STS(9) is a second-player win in 4 moves") {
    auto out = outcome(sts9());
    CHECK(out.winner == Winner::SecondPlayerWins);
    CHECK(out.principal_variation.size() == 4);
}

TEST_CASE("outcome: Fano is a second-player win (all maximal arcs have size 4)") {
    auto out = outcome(fano());
    CHECK(out.winner == Winner::SecondPlayerWins);
    CHECK(out.principal_variation.size() == 4);
}

TEST_CASE("outcome refuses systems above the solver cap") {
    auto cert = embed_complete(6);  // STS(19)
    CHECK_THROWS(outcome(cert.ts, 15));
}

TEST_CASE("harvest on the STS(9): catalog contains the triangle with a 3-set witness") {
    auto cat = harvest_graphs(sts9());
    CHECK(cat.complete);
    std::string tri_key = canonical_form(graph_family(GraphFamily::Complete, 3));
    REQUIRE(cat.by_key.count(tri_key));
    CHECK(cat.by_key.at(tri_key).witness.size() == 3);
    // K_4 is never reachable
    std::string k4_key = canonical_form(graph_family(GraphFamily::Complete, 4));
    CHECK_FALSE(cat.by_key.count(k4_key));
}

TEST_CASE("the STS(9) catalog is exactly {empty graph, triangle} with exact counts") {
    // by 3-transitivity every legal 3-subset (C(9,3) - 12 blocks = 72) leaves
    // the triangle, and every independent 4-set (C(9,4) - 12*6 = 54) is
    // terminal; no other graph states exist
    auto cat = harvest_graphs(nofil::testing::sts9());
    REQUIRE(cat.complete);
    REQUIRE(cat.by_key.size() == 2);
    std::string tri = canonical_form(graph_family(GraphFamily::Complete, 3));
    LabeledGraph empty_graph;  // zero vertices
    std::string g0 = canonical_form(empty_graph);
    REQUIRE(cat.by_key.count(tri));
    REQUIRE(cat.by_key.count(g0));
    CHECK(cat.by_key.at(tri).count == 72);
    CHECK(cat.by_key.at(g0).count == 54);
}

TEST_CASE("the Fano catalog is exactly {C_4, K_1, empty} with exact counts") {
    // every legal pair leaves a 4-cycle (21 pairs), every legal triple leaves
    // one isolated playable point (C(7,3) - 7 = 28), and the 7 complete
    // 4-arcs are terminal
    auto cat = harvest_graphs(fano());
    REQUIRE(cat.complete);
    REQUIRE(cat.by_key.size() == 3);
    std::string c4 = canonical_form(graph_family(GraphFamily::Cycle, 4));
    std::string k1 = canonical_form(graph_family(GraphFamily::Empty, 1));
    std::string g0 = canonical_form(LabeledGraph{});
    CHECK(cat.by_key.at(c4).count == 21);
    CHECK(cat.by_key.at(k1).count == 28);
    CHECK(cat.by_key.at(g0).count == 7);
}

TEST_CASE("every catalog witness replays to its graph") {
    for (const TripleSystem& ts : {fano(), sts9()}) {
        auto cat = harvest_graphs(ts);
        REQUIRE(cat.complete);
        for (const auto& [key, entry] : cat.by_key) {
            auto s = new_game(ts);
            for (const auto& mv : entry.witness) s = play(s, mv);
            auto g = state_graph(s);
            REQUIRE(g);
            CHECK(canonical_form(*g) == key);
        }
    }
}

TEST_CASE("harvest agrees between the serial and parallel paths") {
    for (const TripleSystem& ts : {fano(), sts9()}) {
        auto serial = harvest_graphs(ts, {}, 1);
        auto parallel = harvest_graphs(ts, {}, 2);
        REQUIRE(serial.complete);
        REQUIRE(parallel.complete);
        REQUIRE(serial.by_key.size() == parallel.by_key.size());
        for (const auto& [key, entry] : serial.by_key) {
            REQUIRE(parallel.by_key.count(key));
            CHECK(parallel.by_key.at(key).count == entry.count);
            CHECK(parallel.by_key.at(key).witness == entry.witness);
        }
        CHECK(serial.nodes == parallel.nodes);
    }
}

TEST_CASE("harvest catalog is invariant under relabeling of the system") {
    TripleSystem ts = sts9();
    TripleSystem relabeled = ts;
    // rotate the label strings; the blocks keep their indices
    std::vector<std::string> names{"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"};
    relabeled.points = names;
    auto a = harvest_graphs(ts);
    auto b = harvest_graphs(relabeled);
    std::set<std::string> ka, kb;
    for (const auto& [k, _] : a.by_key) ka.insert(k);
    for (const auto& [k, _] : b.by_key) kb.insert(k);
    CHECK(ka == kb);
}

TEST_CASE("contains_graph") {
    SUBCASE("the triangle is found in the STS(9)") {
        auto res = contains_graph(sts9(), graph_family(GraphFamily::Complete, 3));
        CHECK(res.found);
        // the witness replays to a triangle
        auto s = new_game(sts9());
        for (const auto& mv : res.witness) s = play(s, mv);
        auto g = state_graph(s);
        REQUIRE(g);
        CHECK(g->n() == 3);
        CHECK(g->e() == 3);
    }
    SUBCASE("K_4 is conclusively absent from the STS(9)") {
        auto res = contains_graph(sts9(), graph_family(GraphFamily::Complete, 4));
        CHECK_FALSE(res.found);
        CHECK(res.complete);
    }
    SUBCASE("C_4 appears in the Fano plane with a 2-point witness") {
        auto res = contains_graph(fano(), graph_family(GraphFamily::Cycle, 4));
        REQUIRE(res.found);
        CHECK(res.witness.size() == 2);
    }
}

TEST_CASE("game states never contain a forbidden block classification") {
    auto cat = harvest_graphs(sts9());
    for (const auto& [key, entry] : cat.by_key) {
        auto s = new_game(sts9());
        for (const auto& mv : entry.witness) s = play(s, mv);
        PointPartition part;
        part.cls = s.cls;
        for (auto c : s.cls) {
            if (c == PointClass::Played) part.p++;
            if (c == PointClass::Available) part.a++;
            if (c == PointClass::Unplayable) part.u++;
        }
        auto cl = classify_blocks(*s.ts, part);
        CHECK(cl.counts[BlockClass::FORBIDDEN] == 0);
    }
}

TEST_CASE("game engine agrees with induced_certificate at graph states") {
    auto cat = harvest_graphs(sts9());
    for (const auto& [key, entry] : cat.by_key) {
        if (entry.witness.empty()) continue;
        auto res = induced_certificate(sts9(), entry.witness);
        REQUIRE(res.status == InducedResult::Status::Graph);
        CHECK(canonical_form(res.cert->graph) == key);
        CHECK(verify_embedding(*res.cert).ok);
    }
}

TEST_CASE("terminal states are maximal independent sets") {
    // walk one full game greedily and check every remaining point is blocked
    auto s = new_game(fano());
    while (!legal_moves(s).empty()) s = play(s, legal_moves(s).front());
    for (int x = 0; x < s.ts->v(); ++x) {
        if (s.cls[x] == PointClass::Played) continue;
        CHECK(s.cls[x] == PointClass::Unplayable);
    }
}
