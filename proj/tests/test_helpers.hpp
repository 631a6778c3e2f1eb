#pragma once

#include <array>
#include <string>
#include <vector>

#include "nofil/core.hpp"

namespace nofil::testing {

// Example STS(9): the unique system on {1..9}.
inline TripleSystem sts9() {
    std::vector<std::array<std::string, 3>> blocks;
    for (const char* s : {"123", "456", "789", "147", "258", "369", "159", "267", "348", "168",
                          "249", "357"})
        blocks.push_back({std::string(1, s[0]), std::string(1, s[1]), std::string(1, s[2])});
    return make_triple_system({"1", "2", "3", "4", "5", "6", "7", "8", "9"}, blocks);
}

// Cyclic Fano plane {124,235,346,457,561,672,713}.
inline TripleSystem fano() {
    std::vector<std::array<std::string, 3>> blocks;
    for (const char* s : {"124", "235", "346", "457", "561", "672", "713"})
        blocks.push_back({std::string(1, s[0]), std::string(1, s[1]), std::string(1, s[2])});
    return make_triple_system({"1", "2", "3", "4", "5", "6", "7"}, blocks);
}

// Brute-force isomorphism for tiny graphs (independent of canonical_form).
bool brute_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

}  // namespace nofil::testing
