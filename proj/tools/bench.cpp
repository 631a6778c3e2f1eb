// Compares the serial reference paths against the OpenMP ones: full-tree
// graph harvesting, the admissibility tables and search restarts.

#include <chrono>
#include <cstdio>
#include <string>

#include "nofil/bounds.hpp"
#include "nofil/game.hpp"
#include "nofil/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace nofil;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count() /
           1000.0;
}

void row(const char* name, double serial_ms, double parallel_ms, bool same) {
    printf("%-28s %10.1f ms %10.1f ms   x%.2f  %s\n", name, serial_ms, parallel_ms,
           parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, same ? "results agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 2;
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif
    if (argc > 1) jobs = std::stoi(argv[1]);
    printf("serial reference vs %d worker threads\n\n", jobs);
    printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    {
        SearchConfig cfg;
        cfg.seed = 7;
        auto ts13 = hillclimb_sts(13, cfg);
        auto ts15 = hillclimb_sts(15, cfg);
        if (ts13 && ts15) {
            auto t0 = Clock::now();
            auto s13 = harvest_graphs(*ts13, {}, 1);
            auto s15 = harvest_graphs(*ts15, {}, 1);
            double serial = ms_since(t0);
            t0 = Clock::now();
            auto p13 = harvest_graphs(*ts13, {}, jobs);
            auto p15 = harvest_graphs(*ts15, {}, jobs);
            double parallel = ms_since(t0);
            bool same = write_catalog(s13) == write_catalog(p13) &&
                        write_catalog(s15) == write_catalog(p15);
            row("harvest STS(13)+STS(15)", serial, parallel, same);
        }
    }

    {
        auto t0 = Clock::now();
        auto s = family_table(GraphFamily::Path, 2, 45, 1);
        double serial = ms_since(t0);
        t0 = Clock::now();
        auto p = family_table(GraphFamily::Path, 2, 45, jobs);
        double parallel = ms_since(t0);
        bool same = format_table_records(GraphFamily::Path, s) ==
                    format_table_records(GraphFamily::Path, p);
        row("path table a in [2,45]", serial, parallel, same);
    }

    {
        SearchConfig base;
        base.seed = 2024;
        base.restarts = 20;
        auto g = graph_family(GraphFamily::Empty, 4);
        auto t0 = Clock::now();
        SearchConfig cs = base;
        cs.jobs = 1;
        auto s = search_min_embedding(g, 19, cs);
        double serial = ms_since(t0);
        t0 = Clock::now();
        SearchConfig cp = base;
        cp.jobs = jobs;
        auto p = search_min_embedding(g, 19, cp);
        double parallel = ms_since(t0);
        bool same = s.cert.has_value() == p.cert.has_value() && s.v == p.v;
        row("search empty-4 at v=19", serial, parallel, same);
    }

    return 0;
}
