#include "nofil/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nofil {
namespace {

long choose2(long n) { return n * (n - 1) / 2; }

bool sts_order(int v) { return v % 6 == 1 || v % 6 == 3; }

// complement edge count helper for admissibility scans
LabeledGraph complement(const LabeledGraph& g) {
    LabeledGraph c;
    c.vertices = g.vertices;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.adjacent(i, j)) c.edges.emplace_back(i, j);
    return c;
}

}  // namespace

std::optional<ClassCounts> class_counts(int p, int a, int u, long e) {
    if (p < 0 || a < 0 || u < 0 || e < 0 || e > choose2(a)) return std::nullopt;
    ClassCounts c{};
    c[0] = choose2(p);              // PPU
    c[1] = e;                       // PAA
    c[4] = choose2(a) - e;          // AAU
    c[2] = long(p) * a - 2 * e;     // PAU
    if (c[2] < 0) return std::nullopt;
    long puu2 = long(p) * u - 2 * c[0] - c[2];
    if (puu2 < 0 || puu2 % 2) return std::nullopt;
    c[3] = puu2 / 2;                // PUU
    long auu2 = long(a) * u - c[2] - 2 * c[4];
    if (auu2 < 0 || auu2 % 2) return std::nullopt;
    c[5] = auu2 / 2;                // AUU
    long uuu3 = choose2(u) - c[3] - c[5];
    if (uuu3 < 0 || uuu3 % 3) return std::nullopt;
    c[6] = uuu3 / 3;                // UUU
    return c;
}

BoundReport admissibility_bounds(int v, int a, int u, long e, int chi_g, int chi_gc) {
    if (a == 0 && e > 0) throw std::invalid_argument("admissibility_bounds: edges without vertices");
    BoundReport rep;
    auto add = [&rep](std::string name, bool pass, long lhs, long rhs, bool skipped = false) {
        rep.checks.push_back({std::move(name), pass, skipped, lhs, rhs});
        if (!pass) rep.all_pass = false;
    };
    const long p = v - a - u;

    add("eq1_u_le_v-a-chi", u <= long(v) - a - chi_g, u, long(v) - a - chi_g);
    add("eq2_u_ge_chi_comp", u >= chi_gc, u, chi_gc);
    add("eq3_2u_ge_v-a-1", 2L * u >= long(v) - a - 1, 2L * u, long(v) - a - 1);
    if (a > 0)
        add("eq4_2au_ge_a(v-1)-4e", 2L * a * u >= long(a) * (v - 1) - 4 * e, 2L * a * u,
            long(a) * (v - 1) - 4 * e);
    else
        add("eq4_2au_ge_a(v-1)-4e", true, 0, 0, true);

    // eq5/eq6: |4u - (3v-2a-1)| against sqrt((v-2a+1)^2 + 16e), squared
    {
        const long D = (long(v) - 2 * a + 1) * (long(v) - 2 * a + 1) + 16 * e;
        const long L = (3L * v - 2 * a - 1) - 4L * u;  // eq5 holds iff L <= sqrt(D)
        bool eq5 = (L <= 0) || (L * L <= D);
        add("eq5_u_ge_puu_lower", eq5, L, D);
        const long M = 4L * u - (3L * v - 2 * a - 1);  // eq6 holds iff M <= sqrt(D)
        bool eq6 = (M <= 0) || (M * M <= D);
        add("eq6_u_le_puu_upper", eq6, M, D);
    }

    if (a > 0)
        add("eq7_a(v-a-u)_ge_2e", long(a) * (v - a - u) >= 2 * e, long(a) * (v - a - u), 2 * e);
    else
        add("eq7_a(v-a-u)_ge_2e", true, 0, 0, true);

    // eq8 is equivalent to u <= C(p,2)
    add("eq8_u_le_C(p,2)", u <= choose2(p), u, choose2(p));

    // guarded disjunction eq9 / eq10
    {
        const long guard_lhs = long(v) * v - 4L * v;
        if (guard_lhs <= 24 * e) {
            const long E = 72 * e - 3L * v * v + 12L * v;  // >= 0 under the guard
            const long L9 = 6L * u - 3L * v;               // eq9 iff L9 >= sqrt(E)
            bool eq9 = (L9 >= 0) && (L9 * L9 >= E);
            const long L10 = 3L * v - 6L * u;              // eq10 iff L10 >= sqrt(E)
            bool eq10 = (L10 >= 0) && (L10 * L10 >= E);
            add("eq9or10_uuu_disjunction", eq9 || eq10, eq9 ? L9 : L10, E);
        } else {
            add("eq9or10_uuu_disjunction", true, guard_lhs, 24 * e, true);
        }
    }

    // derived interval p+a-1-2e/p <= u <= C(p,2) and the cubic in p
    if (p > 0) {
        bool lo = p * (p + a - 1) - 2 * e <= p * long(u);
        add("interval_lower", lo, p * (p + a - 1) - 2 * e, p * long(u));
        long cubic = p * p * p - 3 * p * p - 2 * (long(a) - 1) * p + 4 * e;
        add("cubic_p_bound", cubic >= 0, cubic, 0);
    } else {
        add("interval_lower", true, 0, 0, true);
        add("cubic_p_bound", true, 0, 0, true);
    }
    return rep;
}

std::vector<ParameterSet> admissible_parameters(const LabeledGraph& g, int v_max) {
    const int a = g.n();
    const long e = g.e();
    if (v_max < a) throw std::invalid_argument("admissible_parameters: v_max below a");
    const int chi_g = a >= 1 && e > 0 ? chromatic_index(g) : 0;
    const int chi_gc = [&] {
        if (a < 2) return 0;
        LabeledGraph gc = complement(g);
        return gc.edges.empty() ? 0 : chromatic_index(gc);
    }();

    std::vector<ParameterSet> out;
    for (int v = a; v <= v_max; ++v) {
        if (!sts_order(v)) continue;
        std::vector<ParameterSet> at_v;
        for (int p = v - a; p >= 0; --p) {  // descending p
            const int u = v - a - p;
            if (a >= 2 && (p < 1 || u < 1)) continue;
            auto cc = class_counts(p, a, u, e);
            if (!cc) continue;
            BoundReport rep = admissibility_bounds(v, a, u, e, chi_g, chi_gc);
            if (!rep.all_pass) continue;
            at_v.push_back({v, p, a, u, e, *cc});
        }
        out.insert(out.end(), at_v.begin(), at_v.end());
    }
    return out;
}

ObstructionResult structural_obstruction(const ParameterSet& ps) {
    if (ps.counts[3] == 0 && ps.counts[5] == 0) {  // PUU and AUU empty
        if (ps.u % 6 == 1 || ps.u % 6 == 3 || ps.u == 0)
            return {Obstruction::UUUMustBeSTS, ps.u};
        return {Obstruction::Blocked, ps.u};
    }
    return {Obstruction::None, 0};
}

std::string to_string(const ObstructionResult& o) {
    switch (o.kind) {
        case Obstruction::None: return "-";
        case Obstruction::UUUMustBeSTS: return "UUU=STS(" + std::to_string(o.u) + ")";
        case Obstruction::Blocked: return "BLOCKED";
    }
    return "?";
}

MinAdmissible min_admissible_v(const LabeledGraph& g) {
    const int a = g.n();
    const int scan_max = 4 * a + 16;
    auto rows = admissible_parameters(g, scan_max);
    if (rows.empty()) return {0, {}};
    const int v = rows.front().v;
    MinAdmissible out{v, {}};
    for (const auto& r : rows)
        if (r.v == v) out.rows.push_back(r);
    return out;
}

std::vector<TableRow> family_table(GraphFamily family, int a_from, int a_to, int jobs) {
    if (family == GraphFamily::Cycle) a_from = std::max(a_from, 3);
    if (a_from < 1 || a_to < a_from) throw std::invalid_argument("family_table: bad a range");
    const int count = a_to - a_from + 1;
    std::vector<std::vector<TableRow>> per_a(count);

#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) if (jobs > 1)
#endif
    for (int i = 0; i < count; ++i) {
        const int a = a_from + i;
        LabeledGraph g = graph_family(family, a);
        MinAdmissible m = min_admissible_v(g);
        for (const auto& ps : m.rows)
            per_a[i].push_back({a, ps, structural_obstruction(ps)});
    }
    std::vector<TableRow> out;
    for (auto& v : per_a) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::string format_table_text(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "  a    v   (p, a, u)        (PPU, PAA, PAU, PUU, AAU, AUU, UUU)\n";
    int last_a = -1;
    for (const auto& r : rows) {
        std::ostringstream pau, cnt;
        pau << "(" << r.ps.p << ", " << r.ps.a << ", " << r.ps.u << ")";
        cnt << "(";
        for (int i = 0; i < 7; ++i) cnt << (i ? ", " : "") << r.ps.counts[i];
        cnt << ")";
        char buf[64];
        if (r.a != last_a)
            snprintf(buf, sizeof buf, "%3d  %3d   ", r.a, r.ps.v);
        else
            snprintf(buf, sizeof buf, "           ");
        out << buf;
        out << pau.str();
        for (size_t k = pau.str().size(); k < 17; ++k) out << ' ';
        out << cnt.str();
        if (r.obstruction.kind != Obstruction::None) out << "  [" << to_string(r.obstruction) << "]";
        out << "\n";
        last_a = r.a;
    }
    return out.str();
}

std::string format_table_records(GraphFamily family, const std::vector<TableRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << to_string(family) << " " << r.a << " " << r.ps.v << " " << r.ps.p << " " << r.ps.u
            << " " << r.ps.e;
        for (long c : r.ps.counts) out << " " << c;
        out << " " << to_string(r.obstruction) << "\n";
    }
    return out.str();
}

}  // namespace nofil
