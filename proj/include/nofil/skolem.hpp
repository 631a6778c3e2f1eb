#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Skolem, hooked Skolem, split Skolem, Langford and hooked Langford pair
// systems: existence, seeded generation, validation and the two pinned
// special forms used by the cyclic constructions.

namespace nofil {

enum class SeqKind { Skolem, Hooked, Split, Langford, HookedLangford };

const char* to_string(SeqKind k);
bool parse_seq_kind(const std::string& name, SeqKind& out);

struct PairSequence {
    SeqKind kind = SeqKind::Skolem;
    int t = 0;  // order
    int d = 1;  // defect; 1 unless a Langford kind
    // pairs[i] = (a_r, b_r) for difference r = d + i, b_r - a_r = r
    std::vector<std::pair<int, int>> pairs;

    int r_min() const { return d; }
    int r_max() const { return d + t - 1; }
    std::pair<int, int> pair_for(int r) const { return pairs[r - d]; }
};

struct SeqReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Ground set of the kind: skolem {1..2t}, hooked {1..2t-1,2t+1},
// split {1..t,t+2..2t+1}, langford {1..2t}, hooked langford {1..2t-1,2t+1}.
std::vector<int> ground_set(SeqKind kind, int t);

SeqReport validate(const PairSequence& seq);

bool exists(SeqKind kind, int t, int d = 1);

// Backtracking generator, largest difference first, seeded tie-breaking.
// Throws std::domain_error when the existence condition fails.
PairSequence generate(SeqKind kind, int t, int d = 1, uint64_t seed = 1);

// Skolem sequence with b_1 = a_1 + 1 = 2 (t = 0,1 mod 4).
PairSequence special_skolem(int t);
// Hooked Skolem sequence with b_2 = a_2 + 2 = 3 (t = 2,3 mod 4, t >= 6).
PairSequence special_hooked(int t);

// Text form: "kind t d" header then one "r a_r b_r" line per pair.
std::string write_sequence(const PairSequence& seq);
PairSequence read_sequence(std::istream& in);

}  // namespace nofil
