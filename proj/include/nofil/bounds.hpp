#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nofil/core.hpp"

// Feasibility machinery: the ten admissibility inequalities, the
// pair-counting block-class census, enumeration of admissible parameter
// rows and the per-family minimal-order tables.

namespace nofil {

// (|PPU|, |PAA|, |PAU|, |PUU|, |AAU|, |AUU|, |UUU|)
using ClassCounts = std::array<long, 7>;

struct ParameterSet {
    int v = 0, p = 0, a = 0, u = 0;
    long e = 0;
    ClassCounts counts{};
};

// Solves the pair-counting system; empty when some count is negative or
// fractional.
std::optional<ClassCounts> class_counts(int p, int a, int u, long e);

struct BoundCheck {
    std::string name;
    bool pass = true;
    bool skipped = false;
    long lhs = 0, rhs = 0;  // evaluated integer sides (scaled where divided)
};

struct BoundReport {
    std::vector<BoundCheck> checks;
    bool all_pass = true;
};

// Evaluates the ten admissibility inequalities plus the derived u-interval
// and the cubic lower bound on p, all in exact integer arithmetic.
BoundReport admissibility_bounds(int v, int a, int u, long e, int chi_g, int chi_gc);

std::vector<ParameterSet> admissible_parameters(const LabeledGraph& g, int v_max);

enum class Obstruction { None, UUUMustBeSTS, Blocked };

struct ObstructionResult {
    Obstruction kind = Obstruction::None;
    int u = 0;
};

ObstructionResult structural_obstruction(const ParameterSet& ps);

std::string to_string(const ObstructionResult& o);

struct MinAdmissible {
    int v = 0;
    std::vector<ParameterSet> rows;
};

MinAdmissible min_admissible_v(const LabeledGraph& g);

struct TableRow {
    int a = 0;
    ParameterSet ps;
    ObstructionResult obstruction;
};

// One group per a listing all rows at the minimal admissible v.
std::vector<TableRow> family_table(GraphFamily family, int a_from, int a_to, int jobs = 1);

std::string format_table_text(const std::vector<TableRow>& rows);
// records: family a v p u e PPU PAA PAU PUU AAU AUU UUU obstruction
std::string format_table_records(GraphFamily family, const std::vector<TableRow>& rows);

}  // namespace nofil
