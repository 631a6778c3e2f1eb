#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "nofil/bounds.hpp"
#include "nofil/constructions.hpp"
#include "nofil/core.hpp"
#include "nofil/game.hpp"
#include "nofil/io.hpp"
#include "nofil/search.hpp"
#include "nofil/skolem.hpp"

using namespace nofil;

namespace {

struct Global {
    uint64_t seed = 1;
    std::string format = "text";
    bool quiet = false;
    int jobs = 1;
};

LabeledGraph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        auto fam = parse_family(spec.substr(0, colon));
        if (!fam) throw CLI::ValidationError("--graph", "unknown family " + spec);
        int a = std::stoi(spec.substr(colon + 1));
        return graph_family(*fam, a);
    }
    // a file: lines with two tokens are edges, single tokens isolated vertices
    std::ifstream f(spec);
    if (!f) throw CLI::ValidationError("--graph", "cannot open " + spec);
    std::vector<std::string> verts;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    auto touch = [&](const std::string& s) {
        if (seen.insert(s).second) verts.push_back(s);
    };
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            touch(toks[0]);
        } else if (toks.size() == 2) {
            touch(toks[0]);
            touch(toks[1]);
            edges.emplace_back(toks[0], toks[1]);
        } else {
            throw CLI::ValidationError("--graph", "bad line in " + spec);
        }
    }
    return make_graph(verts, edges);
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

void print_state(const GameState& s, int turn) {
    bool terse = true;
    for (const auto& p : s.ts->points)
        if (p.size() > 1) terse = false;
    std::vector<std::string> P, A, U;
    for (int x = 0; x < s.ts->v(); ++x) {
        const auto& lbl = s.ts->points[x];
        if (s.cls[x] == PointClass::Played) continue;
        (s.cls[x] == PointClass::Available ? A : U).push_back(lbl);
    }
    for (PointId x : s.played) P.push_back(s.ts->points[x]);
    std::string hyper;
    for (const auto& h : s.hyperedges) {
        if (!hyper.empty()) hyper += " ";
        for (size_t i = 0; i < h.size(); ++i) {
            if (i && !terse) hyper += ",";
            hyper += s.ts->points[h[i]];
        }
    }
    std::cout << "turn " << turn << ": P={" << join(P, ",") << "} A={" << join(A, ",")
              << "} U={" << join(U, ",") << "}\n  available hypergraph: "
              << (hyper.empty() ? "(empty)" : hyper) << "\n";
}

std::vector<std::string> split_moves(const std::string& script) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : script) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nofil: graph embeddings in Steiner triple systems"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    if (const char* env = std::getenv("NOFIL_SEED")) g.seed = std::strtoull(env, nullptr, 10);
    app.add_option("--seed", g.seed, "random seed (default from NOFIL_SEED)");
    app.add_option("--format", g.format, "output format: text or records")
        ->check(CLI::IsMember({"text", "records"}));
    app.add_flag("--quiet", g.quiet, "suppress informational output");
    app.add_option("--jobs", g.jobs, "worker threads for search and harvest");

    int exit_code = 0;

    // table
    auto* tab = app.add_subcommand("table", "smallest admissible parameter tables");
    std::string tab_family = "empty";
    int tab_from = 2, tab_to = 45;
    tab->add_option("--family", tab_family, "empty|path|cycle|complete|star")->required();
    tab->add_option("--from", tab_from, "first a");
    tab->add_option("--to", tab_to, "last a");
    tab->callback([&] {
        auto fam = parse_family(tab_family);
        if (!fam) throw CLI::ValidationError("--family", "unknown family");
        auto rows = family_table(*fam, tab_from, tab_to, g.jobs);
        std::cout << (g.format == "records" ? format_table_records(*fam, rows)
                                            : format_table_text(rows));
    });

    // bounds
    auto* bnd = app.add_subcommand("bounds", "admissibility bounds for one graph");
    std::string bnd_graph;
    int bnd_vmax = 0, bnd_v = 0, bnd_u = -1;
    bnd->add_option("--graph", bnd_graph, "family:a or graph file")->required();
    bnd->add_option("--vmax", bnd_vmax, "largest order to scan");
    bnd->add_option("--v", bnd_v, "evaluate a single order");
    bnd->add_option("--u", bnd_u, "evaluate a single u (with --v)");
    bnd->callback([&] {
        LabeledGraph gr = parse_graph_spec(bnd_graph);
        if (bnd_v > 0 && bnd_u >= 0) {
            int chi = gr.edges.empty() ? 0 : chromatic_index(gr);
            LabeledGraph gc;
            gc.vertices = gr.vertices;
            for (int i = 0; i < gr.n(); ++i)
                for (int j = i + 1; j < gr.n(); ++j)
                    if (!gr.adjacent(i, j)) gc.edges.emplace_back(i, j);
            int chic = gc.edges.empty() ? 0 : chromatic_index(gc);
            auto rep = admissibility_bounds(bnd_v, gr.n(), bnd_u, gr.e(), chi, chic);
            for (const auto& c : rep.checks)
                std::cout << c.name << " " << (c.skipped ? "skip" : c.pass ? "pass" : "FAIL")
                          << " lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
            auto cc = class_counts(bnd_v - gr.n() - bnd_u, gr.n(), bnd_u, gr.e());
            if (cc) {
                std::cout << "counts";
                for (long c : *cc) std::cout << " " << c;
                std::cout << "\n";
            } else {
                std::cout << "counts infeasible\n";
            }
            if (!rep.all_pass || !cc) exit_code = 1;
            return;
        }
        int vmax = bnd_vmax > 0 ? bnd_vmax : 4 * gr.n() + 16;
        auto rows = admissible_parameters(gr, vmax);
        for (const auto& ps : rows) {
            std::cout << ps.v << " " << ps.p << " " << ps.u << " " << ps.e;
            for (long c : ps.counts) std::cout << " " << c;
            std::cout << " " << to_string(structural_obstruction(ps)) << "\n";
        }
        if (rows.empty()) exit_code = 1;
    });

    // skolem
    auto* sko = app.add_subcommand("skolem", "generate pair sequences");
    std::string sko_kind = "skolem";
    int sko_t = 0, sko_d = 1;
    bool sko_special = false;
    sko->add_option("--kind", sko_kind, "skolem|hooked|split|langford|hooked_langford");
    sko->add_option("--t", sko_t, "order");
    sko->add_option("--d", sko_d, "defect (Langford kinds)");
    sko->add_flag("--special", sko_special, "pinned first-pair forms (difference 1 at (1,2) / difference 2 at (1,3))");
    std::string sko_validate;
    sko->add_option("--validate", sko_validate, "validate a sequence file instead of generating");
    sko->callback([&] {
        if (!sko_validate.empty()) {
            std::ifstream f(sko_validate);
            if (!f) throw CLI::ValidationError("--validate", "cannot open " + sko_validate);
            auto seq = read_sequence(f);
            auto rep = validate(seq);
            for (const auto& viol : rep.violations) std::cout << "violation: " << viol << "\n";
            if (!g.quiet) std::cout << (rep.ok ? "sequence valid" : "sequence rejected") << "\n";
            if (!rep.ok) exit_code = 1;
            return;
        }
        SeqKind kind;
        if (!parse_seq_kind(sko_kind, kind)) throw CLI::ValidationError("--kind", "unknown kind");
        try {
            PairSequence seq;
            if (sko_special && kind == SeqKind::Skolem)
                seq = special_skolem(sko_t);
            else if (sko_special && kind == SeqKind::Hooked)
                seq = special_hooked(sko_t);
            else
                seq = generate(kind, sko_t, sko_d, g.seed);
            std::cout << write_sequence(seq);
        } catch (const std::domain_error& e) {
            std::cerr << e.what() << "\n";
            exit_code = 1;
        }
    });

    // construct
    auto* con = app.add_subcommand("construct", "direct embeddings");
    int con_complete = 0, con_star = 0;
    std::string con_emit;
    bool con_pres = false;
    con->add_option("--complete", con_complete, "embed the complete graph K_a");
    con->add_option("--star", con_star, "embed the star K_{1,a-1}");
    con->add_option("--emit", con_emit, "write the certificate to a file");
    con->add_flag("--presentation", con_pres, "also print the cyclic presentation");
    con->callback([&] {
        if ((con_complete == 0) == (con_star == 0))
            throw CLI::ValidationError("construct", "exactly one of --complete/--star");
        EmbeddingCertificate cert;
        if (con_complete) {
            cert = embed_complete(con_complete);
            if (!g.quiet)
                std::cerr << "K_" << con_complete << " in an STS(" << cert.ts.v() << ")\n";
        } else {
            StarEmbedding star = embed_star(con_star);
            if (star.search_required) {
                std::cerr << "construction unavailable; use the search subcommand\n";
                for (const auto& r : star.repair_log) std::cerr << "  " << r << "\n";
                exit_code = 1;
                return;
            }
            cert = star.cert;
            if (!g.quiet)
                std::cerr << "K_{1," << con_star - 1 << "} in an STS(" << star.v
                          << "), order tag: " << to_string(star.tag) << "\n";
            if (con_pres && star.presentation) {
                const auto& cp = *star.presentation;
                std::cout << "modulus " << cp.modulus << "\ncopies";
                for (int c : cp.copies) std::cout << " " << c;
                std::cout << "\nfixed";
                for (const auto& f : cp.fixed) std::cout << " " << f;
                std::cout << "\n";
                for (const auto& b : cp.base_blocks) {
                    std::cout << "base";
                    for (const auto& pt : b) std::cout << " " << cyclic_label(cp, pt);
                    std::cout << "\n";
                }
                for (const auto& b : star.extra_blocks)
                    std::cout << "fixed-block " << b[0] << " " << b[1] << " " << b[2] << "\n";
            }
        }
        std::string text = write_certificate(cert);
        if (!con_emit.empty())
            write_file(con_emit, text);
        else
            std::cout << text;
        if (!verify_embedding(cert).ok) exit_code = 1;
    });

    // verify
    auto* ver = app.add_subcommand("verify", "verify an embedding certificate");
    std::string ver_file;
    ver->add_option("file", ver_file, "certificate file")->required();
    ver->callback([&] {
        auto cert = read_certificate_file(ver_file);
        auto vrep = validate_sts(cert.ts);
        auto rep = verify_embedding(cert);
        if (!vrep.ok) {
            for (const auto& s : vrep.violations) std::cout << "invalid: " << s << "\n";
            exit_code = 1;
        }
        if (!rep.ok) {
            for (const auto& s : rep.failures) std::cout << "failure: " << s << "\n";
            exit_code = 1;
        }
        if (!g.quiet)
            std::cout << (exit_code == 0 ? "certificate verifies" : "certificate rejected")
                      << "\n";
    });

    // play
    auto* ply = app.add_subcommand("play", "play the marking game on a system");
    std::string ply_sts, ply_script;
    bool ply_interactive = false;
    ply->add_option("--sts", ply_sts, "system file")->required();
    ply->add_option("--script", ply_script, "comma-separated moves to replay");
    ply->add_flag("--interactive", ply_interactive, "read moves from stdin");
    ply->callback([&] {
        TripleSystem ts = read_sts_file(ply_sts);
        auto vrep = validate_sts(ts);
        if (!vrep.ok) {
            std::cerr << "not a valid system: " << vrep.violations.front() << "\n";
            exit_code = 1;
            return;
        }
        GameState s = new_game(ts);
        int turn = 0;
        print_state(s, turn);
        for (const auto& mv : split_moves(ply_script)) {
            s = play(s, mv);
            print_state(s, ++turn);
        }
        if (ply_interactive) {
            std::string mv;
            while (!legal_moves(s).empty()) {
                std::cout << "move> " << std::flush;
                if (!(std::cin >> mv) || mv == "q") break;
                try {
                    s = play(s, mv);
                    print_state(s, ++turn);
                } catch (const std::exception& e) {
                    std::cout << e.what() << "\n";
                }
            }
        }
        if (legal_moves(s).empty())
            std::cout << "game over after " << turn << " moves; player " << (turn % 2 ? 1 : 2)
                      << " made the last move\n";
    });

    // solve
    auto* sol = app.add_subcommand("solve", "exhaustive outcome of a system");
    std::string sol_sts;
    int sol_cap = 15;
    sol->add_option("--sts", sol_sts, "system file")->required();
    sol->add_option("--cap", sol_cap, "largest solvable order");
    sol->callback([&] {
        TripleSystem ts = read_sts_file(sol_sts);
        auto out = outcome(ts, sol_cap);
        std::cout << (out.winner == Winner::FirstPlayerWins ? "first player wins"
                                                            : "second player wins")
                  << "\nprincipal variation: " << join(out.principal_variation, " ")
                  << "\ngame length: " << out.principal_variation.size()
                  << "\nstates: " << out.states << "\n";
    });

    // harvest
    auto* har = app.add_subcommand("harvest", "collect embedded graphs from game trees");
    std::string har_sts;
    int har_v = 0, har_samples = 1, har_maxverts = 12;
    long har_maxnodes = 10'000'000;
    har->add_option("--sts", har_sts, "system file");
    har->add_option("--hillclimb", har_v, "sample hill-climbed systems of this order");
    har->add_option("--samples", har_samples, "number of sampled systems");
    har->add_option("--max-nodes", har_maxnodes, "node budget");
    har->add_option("--max-graph-vertices", har_maxverts, "largest graph recorded");
    har->callback([&] {
        HarvestLimits limits{har_maxnodes, har_maxverts};
        GraphCatalog cat;
        if (!har_sts.empty()) {
            cat = harvest_graphs(read_sts_file(har_sts), limits, g.jobs);
        } else if (har_v > 0) {
            SearchConfig cfg;
            cfg.seed = g.seed;
            cfg.jobs = g.jobs;
            cat = sample_and_harvest(har_v, har_samples, cfg, limits);
        } else {
            throw CLI::ValidationError("harvest", "need --sts or --hillclimb");
        }
        std::cout << write_catalog(cat);
        if (!cat.complete) exit_code = 1;
    });

    // search
    auto* sea = app.add_subcommand("search", "randomized minimal-embedding search");
    std::string sea_graph, sea_emit, sea_priority = "p";
    int sea_vmax = 0, sea_restarts = 20;
    sea->add_option("--graph", sea_graph, "family:a or graph file")->required();
    sea->add_option("--vmax", sea_vmax, "largest order to try")->required();
    sea->add_option("--restarts", sea_restarts, "hill-climb restarts per attempt");
    sea->add_option("--priority", sea_priority, "p or u")->check(CLI::IsMember({"p", "u"}));
    sea->add_option("--emit", sea_emit, "write the certificate to a file");
    sea->callback([&] {
        LabeledGraph gr = parse_graph_spec(sea_graph);
        SearchConfig cfg;
        cfg.seed = g.seed;
        cfg.restarts = sea_restarts;
        cfg.jobs = g.jobs;
        cfg.priority = sea_priority == "u" ? SearchPriority::LargeU : SearchPriority::LargeP;
        auto res = search_min_embedding(gr, sea_vmax, cfg);
        std::cout << format_attempt_log(res.log);
        if (!res.cert) {
            if (!g.quiet) std::cerr << "no embedding found up to v=" << sea_vmax << "\n";
            exit_code = 1;
            return;
        }
        if (!g.quiet) std::cerr << "found at v=" << res.v << "\n";
        if (!sea_emit.empty())
            write_file(sea_emit, write_certificate(*res.cert));
        else if (g.format == "text")
            std::cout << write_certificate(*res.cert);
    });

    // pasch
    auto* pas = app.add_subcommand("pasch", "list and switch pasch configurations");
    std::string pas_sts, pas_cert, pas_emit;
    int pas_switch = -1;
    bool pas_transfer = false;
    pas->add_option("--sts", pas_sts, "system file");
    pas->add_option("--cert", pas_cert, "certificate file (for --transfer)");
    pas->add_option("--switch", pas_switch, "apply the switch with this index");
    pas->add_flag("--transfer", pas_transfer, "move an available point out of the graph");
    pas->add_option("--emit", pas_emit, "write the result to a file");
    pas->callback([&] {
        if (pas_transfer) {
            if (pas_cert.empty()) throw CLI::ValidationError("pasch", "--transfer needs --cert");
            auto cert = read_certificate_file(pas_cert);
            auto next = pasch_transfer(cert);
            if (!next) {
                std::cerr << "no transferable pasch found\n";
                exit_code = 1;
                return;
            }
            std::string text = write_certificate(*next);
            if (!pas_emit.empty())
                write_file(pas_emit, text);
            else
                std::cout << text;
            return;
        }
        if (pas_sts.empty()) throw CLI::ValidationError("pasch", "need --sts");
        TripleSystem ts = read_sts_file(pas_sts);
        auto paschs = find_paschs(ts);
        if (pas_switch >= 0) {
            if (pas_switch >= (int)paschs.size()) {
                std::cerr << "switch index out of range (found " << paschs.size() << ")\n";
                exit_code = 1;
                return;
            }
            TripleSystem out = pasch_switch(ts, paschs[pas_switch]);
            std::string text = write_sts(out);
            if (!pas_emit.empty())
                write_file(pas_emit, text);
            else
                std::cout << text;
            return;
        }
        for (size_t i = 0; i < paschs.size(); ++i) {
            const auto& pc = paschs[i];
            std::cout << i;
            for (PointId x : {pc.u, pc.v, pc.z, pc.y, pc.w, pc.x}) std::cout << " " << ts.points[x];
            std::cout << "\n";
        }
        if (!g.quiet) std::cerr << paschs.size() << " pasch configurations\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
