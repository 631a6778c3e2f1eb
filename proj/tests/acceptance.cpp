// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion (with sub-lines where a criterion
// splits into independently meaningful parts). Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nofil/bounds.hpp"
#include "nofil/constructions.hpp"
#include "nofil/core.hpp"
#include "nofil/game.hpp"
#include "nofil/io.hpp"
#include "nofil/search.hpp"
#include "nofil/skolem.hpp"

using namespace nofil;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : " - ",
           detail.c_str());
    if (!ok) ++failures;
}

double secs_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count() /
           1000.0;
}

TripleSystem example_sts9() {
    std::vector<std::array<std::string, 3>> blocks;
    for (const char* s : {"123", "456", "789", "147", "258", "369", "159", "267", "348", "168",
                          "249", "357"})
        blocks.push_back({std::string(1, s[0]), std::string(1, s[1]), std::string(1, s[2])});
    return make_triple_system({"1", "2", "3", "4", "5", "6", "7", "8", "9"}, blocks);
}

// ---- criterion 1: table regression --------------------------------------

struct GoldenRow {
    int a, v, p, u;
    ClassCounts counts;
};

std::vector<GoldenRow> load_golden(const std::string& name) {
    std::ifstream f(std::string(NOFIL_DATA_DIR) + "/" + name);
    std::vector<GoldenRow> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        GoldenRow r{};
        ss >> r.a >> r.v >> r.p >> r.u;
        for (auto& c : r.counts) ss >> c;
        rows.push_back(r);
    }
    return rows;
}

void criterion_tables() {
    auto t0 = Clock::now();
    struct Fam {
        GraphFamily f;
        const char* golden;
        int from;
    };
    bool all_ok = true;
    std::string detail;
    for (Fam fam : {Fam{GraphFamily::Empty, "table_empty.txt", 2},
                    Fam{GraphFamily::Path, "table_path.txt", 2},
                    Fam{GraphFamily::Cycle, "table_cycle.txt", 4}}) {
        auto golden = load_golden(fam.golden);
        auto table = family_table(fam.f, fam.from, 45, 2);
        bool ok = table.size() == golden.size();
        for (size_t i = 0; ok && i < golden.size(); ++i)
            ok = table[i].a == golden[i].a && table[i].ps.v == golden[i].v &&
                 table[i].ps.p == golden[i].p && table[i].ps.u == golden[i].u &&
                 table[i].ps.counts == golden[i].counts;
        if (!ok) {
            all_ok = false;
            detail += std::string(to_string(fam.f)) + " diverges; ";
        }
    }
    double dt = secs_since(t0);
    char buf[128];
    snprintf(buf, sizeof buf, "%sthree family tables, a up to 45, %.2fs (budget 10s)",
             detail.c_str(), dt);
    report("table regression", all_ok && dt < 10.0, buf);
}

// ---- criterion 2: scripted example game ----------------------------------

void criterion_example_game() {
    TripleSystem ts = example_sts9();
    auto want = [](std::initializer_list<const char*> xs) {
        std::set<std::string> s;
        for (auto* x : xs) s.insert(x);
        return s;
    };
    std::vector<std::set<std::string>> wantP{{},
                                             want({"1"}),
                                             want({"1", "2"}),
                                             want({"1", "2", "6"}),
                                             want({"1", "2", "6", "4"})};
    std::vector<std::set<std::string>> wantU{{},
                                             {},
                                             want({"3"}),
                                             want({"3", "7", "8"}),
                                             want({"3", "7", "8", "5", "9"})};
    bool ok = true;
    GameState s = new_game(ts);
    int turn = 0;
    auto check_turn = [&] {
        std::set<std::string> P, U;
        for (int x = 0; x < ts.v(); ++x) {
            if (s.cls[x] == PointClass::Played) P.insert(ts.points[x]);
            if (s.cls[x] == PointClass::Unplayable) U.insert(ts.points[x]);
        }
        if (P != wantP[turn] || U != wantU[turn]) ok = false;
    };
    check_turn();
    for (const char* mv : {"1", "2", "6", "4"}) {
        s = play(s, mv);
        ++turn;
        check_turn();
        if (turn == 3) {
            auto g = state_graph(s);
            if (!g || g->n() != 3 || g->e() != 3)
                ok = false;
            else {
                std::set<std::set<std::string>> edges;
                for (auto [i, j] : g->edges)
                    edges.insert({g->vertices[i], g->vertices[j]});
                std::set<std::set<std::string>> expect{
                    {"4", "5"}, {"5", "9"}, {"4", "9"}};
                if (edges != expect) ok = false;
            }
        }
    }
    auto out = outcome(ts);
    bool outcome_ok =
        out.winner == Winner::SecondPlayerWins && out.principal_variation.size() == 4;
    report("example game replay", ok && outcome_ok,
           "line 1,2,6,4 reproduces every turn; triangle at turn 3; second player wins in 4");
}

// ---- criterion 3: complete graphs ----------------------------------------

void criterion_complete() {
    bool ok = true;
    double worst = 0;
    for (int a = 3; a <= 12; ++a) {
        auto t0 = Clock::now();
        auto cert = embed_complete(a);
        double dt = secs_since(t0);
        worst = std::max(worst, dt);
        if (dt >= 5.0) ok = false;
        if (cert.ts.v() != (a % 2 ? 3 * a : 3 * a + 1)) ok = false;
        if (!verify_embedding(cert).ok) ok = false;
        if (a % 2 == 0) {
            auto cl = classify_blocks(cert.ts, cert.partition);
            ClassCounts got{};
            for (int i = 0; i < 7; ++i) got[i] = cl.counts.n[i];
            ClassCounts want{long(a) * (a - 1) / 2, long(a) * (a - 1) / 2, a, a / 2, 0,
                             long(a) * a / 2,       0};
            if (got != want) ok = false;
        }
    }
    char buf[96];
    snprintf(buf, sizeof buf, "verified at 3a / 3a+1 with the even census, worst %.2fs", worst);
    report("complete graphs a in [3,12]", ok, buf);

    // a = 2: the stated order 3a+1 = 7 admits no valid embedding of K_2 at
    // all (u <= C(p,2) fails for every partition of an STS(7)), so this
    // sub-criterion cannot hold; the construction still emits the system
    auto cert2 = embed_complete(2);
    bool two_ok = cert2.ts.v() == 7 && verify_embedding(cert2).ok;
    report("complete graph a=2 at v=7", two_ok,
           "unattainable: no partition of an STS(7) embeds K_2 (minimal admissible order is 13)");
}

// ---- criterion 4: stars ---------------------------------------------------

void criterion_stars() {
    bool small_ok = true;
    for (int a : {3, 4, 6}) {
        auto star = embed_star(a);
        if (star.search_required || !verify_embedding(star.cert).ok) small_ok = false;
        if (a == 3 && star.v != 13) small_ok = false;
        if ((a == 4 || a == 6) && star.v != 19) small_ok = false;
        // the stored systems are the published ones; spot-check their shape
        if (star.cert.graph.e() != a - 1) small_ok = false;
    }
    report("stars a in {3,4,6} from the stored systems", small_ok,
           "stored STS(13)/STS(19) tables verify");

    auto star2 = embed_star(2);
    report("star a=2 at v=7", verify_embedding(star2.cert).ok,
           "unattainable for the same reason as the complete graph a=2");

    auto expected_v = [](int a) {
        switch (a % 6) {
            case 0: return 4 * a - 3;
            case 1: return 4 * a + 3;
            case 2: return 4 * a - 1;
            case 3: return 4 * a - 5;
            case 4: return 4 * a - 3;
            default: return 4 * a - 5;
        }
    };
    bool ok = true;
    double worst = 0;
    int built = 0, fallbacks = 0;
    for (int a = 11; a <= 29; ++a) {
        auto t0 = Clock::now();
        auto star = embed_star(a);
        double dt = secs_since(t0);
        worst = std::max(worst, dt);
        if (dt >= 30.0) ok = false;
        if (star.search_required) {
            ++fallbacks;  // none are expected in this range
            ok = false;
            continue;
        }
        ++built;
        if (star.v != expected_v(a)) ok = false;
        if (!verify_embedding(star.cert).ok) ok = false;
    }
    char buf[128];
    snprintf(buf, sizeof buf, "%d built, %d fallbacks, orders match 4a-5/4a-3/4a-1/4a+3, worst %.2fs",
             built, fallbacks, worst);
    report("stars a in [11,29]", ok, buf);
}

// ---- criterion 5: pair sequences ------------------------------------------

void criterion_skolem() {
    bool ok = true;
    for (SeqKind k : {SeqKind::Skolem, SeqKind::Hooked, SeqKind::Split, SeqKind::Langford,
                      SeqKind::HookedLangford}) {
        int dmax = (k == SeqKind::Langford || k == SeqKind::HookedLangford) ? 5 : 1;
        for (int d = 1; d <= dmax; ++d)
            for (int t = 1; t <= 20; ++t) {
                bool ex = exists(k, t, d);
                bool generated = false;
                try {
                    auto seq = generate(k, t, d, 1);
                    generated = validate(seq).ok;
                } catch (const std::domain_error&) {
                    generated = false;
                }
                if (generated != ex) ok = false;
            }
    }
    for (int t = 1; t <= 30; ++t) {
        if (t % 4 == 0 || t % 4 == 1) {
            auto s = special_skolem(t);
            if (!validate(s).ok || s.pair_for(1) != std::pair<int, int>{1, 2}) ok = false;
        }
        if (t >= 6 && (t % 4 == 2 || t % 4 == 3)) {
            auto s = special_hooked(t);
            if (!validate(s).ok || s.pair_for(2) != std::pair<int, int>{1, 3}) ok = false;
        }
    }
    auto verbatim = [&](SeqKind k, int t, int d, std::vector<std::pair<int, int>> pairs) {
        PairSequence s;
        s.kind = k;
        s.t = t;
        s.d = d;
        s.pairs = std::move(pairs);
        if (!validate(s).ok) ok = false;
    };
    verbatim(SeqKind::Skolem, 4, 1, {{1, 2}, {5, 7}, {3, 6}, {4, 8}});
    verbatim(SeqKind::Hooked, 6, 1, {{9, 10}, {1, 3}, {4, 7}, {2, 6}, {8, 13}, {5, 11}});
    verbatim(SeqKind::Split, 4, 1, {{1, 2}, {7, 9}, {3, 6}, {4, 8}});
    verbatim(SeqKind::HookedLangford, 5, 2, {{4, 6}, {8, 11}, {1, 5}, {2, 7}, {3, 9}});
    report("pair sequence suite", ok,
           "generate iff exists for t<=20, pinned special pairs t<=30, four verbatim examples");
}

// ---- criterion 6: bounds minimality ----------------------------------------

void criterion_bounds() {
    bool ok = true;
    for (int a = 3; a <= 12; ++a)
        if (min_admissible_v(graph_family(GraphFamily::Complete, a)).v !=
            (a % 2 ? 3 * a : 3 * a + 1))
            ok = false;
    report("minimal orders for complete graphs a in [3,12]", ok, "3a odd, 3a+1 even");
    report("minimal order for K_2 at 3a+1 = 7",
           min_admissible_v(graph_family(GraphFamily::Complete, 2)).v == 7,
           "unattainable: the bounds give 13 (the a=2 case of the formula has no witness)");

    bool nm = min_admissible_v(graph_family(GraphFamily::Path, 4)).v == 19 &&
              min_admissible_v(graph_family(GraphFamily::Path, 5)).v == 15 &&
              min_admissible_v(graph_family(GraphFamily::Cycle, 9)).v == 27 &&
              min_admissible_v(graph_family(GraphFamily::Cycle, 10)).v == 25;
    report("non-monotone minima path(4)>path(5), cycle(9)>cycle(10)", nm, "19>15 and 27>25");

    std::set<int> blocked;
    std::set<int> blocked_u;
    for (const auto& tr : family_table(GraphFamily::Empty, 2, 6))
        if (tr.obstruction.kind == Obstruction::Blocked) {
            blocked.insert(tr.a);
            blocked_u.insert(tr.obstruction.u);
        }
    report("structural obstructions for empty graphs a in [2,6]",
           blocked == std::set<int>{2, 3, 6} && blocked_u == std::set<int>{6, 10},
           "exactly a in {2,3,6} blocked, with u in {6,6,10}");
}

// ---- criterion 7: randomized search ----------------------------------------

void criterion_search() {
    struct Case {
        GraphFamily f;
        int a;
        int v;
    };
    bool ok = true;
    std::string detail;
    for (Case c : {Case{GraphFamily::Cycle, 4, 7}, Case{GraphFamily::Star, 3, 13},
                   Case{GraphFamily::Path, 5, 15}, Case{GraphFamily::Cycle, 5, 15},
                   Case{GraphFamily::Empty, 4, 19}}) {
        SearchConfig cfg;
        cfg.seed = 2024;
        cfg.restarts = 20;
        cfg.jobs = 2;
        auto t0 = Clock::now();
        auto res = search_min_embedding(graph_family(c.f, c.a), c.v, cfg);
        double dt = secs_since(t0);
        bool found = res.cert && res.v == c.v && verify_embedding(*res.cert).ok;
        if (!found || dt >= 300.0) ok = false;
        char buf[64];
        snprintf(buf, sizeof buf, "%s-%d@%d %.1fs ", to_string(c.f), c.a, c.v, dt);
        detail += buf;
    }
    report("randomized completion search", ok, detail);
}

// ---- criterion 8: property suites -------------------------------------------

void criterion_properties() {
    // pair coverage on every constructed or completed system
    bool cover_ok = true;
    for (int a = 3; a <= 10; ++a)
        if (!validate_sts(embed_complete(a).ts).ok) cover_ok = false;
    for (int a : {5, 9, 11, 13, 14, 16})
        if (auto st = embed_star(a); !st.search_required && !validate_sts(st.cert.ts).ok)
            cover_ok = false;
    report("pair coverage of constructed systems", cover_ok, "complete a<=10 and six stars");

    // pasch switching on hill-climbed systems of order 19
    SearchConfig cfg;
    cfg.seed = 77;
    bool pasch_ok = true;
    int tried = 0;
    for (int sample = 0; sample < 24 && tried < 100; ++sample) {
        SearchConfig one = cfg;
        one.seed = cfg.seed + sample;
        auto ts = hillclimb_sts(19, one);
        if (!ts) continue;
        auto paschs = find_paschs(*ts);
        for (const auto& pc : paschs) {
            if (tried >= 100) break;
            ++tried;
            TripleSystem sw = pasch_switch(*ts, pc);
            if (!validate_sts(sw).ok) pasch_ok = false;
            // the switch is an involution: the image configuration (z and w
            // exchanged) switches back to the original
            PaschConfiguration inv{pc.u, pc.v, pc.w, pc.y, pc.z, pc.x};
            TripleSystem back = pasch_switch(sw, inv);
            if (back.blocks != ts->blocks) pasch_ok = false;
        }
    }
    char buf[64];
    snprintf(buf, sizeof buf, "%d switches validated and inverted", tried);
    report("pasch switch involution and validity", pasch_ok && tried == 100, buf);

    // harvest witness replay soundness at v <= 13
    bool replay_ok = true;
    std::vector<TripleSystem> systems;
    {
        std::vector<std::array<std::string, 3>> fb;
        for (const char* s : {"124", "235", "346", "457", "561", "672", "713"})
            fb.push_back({std::string(1, s[0]), std::string(1, s[1]), std::string(1, s[2])});
        systems.push_back(make_triple_system({"1", "2", "3", "4", "5", "6", "7"}, fb));
    }
    systems.push_back(example_sts9());
    for (uint64_t s = 1; s <= 2; ++s) {
        SearchConfig one;
        one.seed = s;
        if (auto ts = hillclimb_sts(13, one)) systems.push_back(*ts);
    }
    long replayed = 0;
    for (const auto& ts : systems) {
        auto cat = harvest_graphs(ts, {}, 2);
        if (!cat.complete) replay_ok = false;
        for (const auto& [key, entry] : cat.by_key) {
            GameState s = new_game(ts);
            for (const auto& mv : entry.witness) s = play(s, mv);
            auto g = state_graph(s);
            if (!g || canonical_form(*g) != key) replay_ok = false;
            ++replayed;
        }
    }
    snprintf(buf, sizeof buf, "%ld catalog entries replayed over %zu systems", replayed,
             systems.size());
    report("harvest witness replay at v <= 13", replay_ok && replayed > 0, buf);

    // census feasibility implies the count-derived bounds
    std::mt19937_64 rng(4242);
    bool cross_ok = true;
    int checked = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        int p = (int)(rng() % 14), a = (int)(rng() % 14), u = (int)(rng() % 18);
        long maxe = long(a) * (a - 1) / 2;
        long e = maxe ? (long)(rng() % (maxe + 1)) : 0;
        auto cc = class_counts(p, a, u, e);
        if (!cc) continue;
        ++checked;
        auto rep = admissibility_bounds(p + a + u, a, u, e, 0, 0);
        for (const auto& c : rep.checks) {
            if (c.name.rfind("eq1", 0) == 0 || c.name.rfind("eq2", 0) == 0 ||
                c.name.rfind("eq8", 0) == 0 || c.name.rfind("interval", 0) == 0 ||
                c.name.rfind("cubic", 0) == 0)
                continue;
            if (!c.pass && !c.skipped) cross_ok = false;
        }
    }
    snprintf(buf, sizeof buf, "%d feasible of 10000 random tuples", checked);
    report("census feasibility implies the derived bounds", cross_ok && checked > 500, buf);
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion_tables();
    criterion_example_game();
    criterion_complete();
    criterion_stars();
    criterion_skolem();
    criterion_bounds();
    criterion_search();
    criterion_properties();
    printf("\n%s: %d failing line(s), %.1fs total\n", failures ? "RED" : "GREEN", failures,
           secs_since(t0));
    return failures ? 1 : 0;
}
