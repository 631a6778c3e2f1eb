#include "nofil/skolem.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nofil {

const char* to_string(SeqKind k) {
    switch (k) {
        case SeqKind::Skolem: return "skolem";
        case SeqKind::Hooked: return "hooked";
        case SeqKind::Split: return "split";
        case SeqKind::Langford: return "langford";
        case SeqKind::HookedLangford: return "hooked_langford";
    }
    return "?";
}

bool parse_seq_kind(const std::string& name, SeqKind& out) {
    for (SeqKind k : {SeqKind::Skolem, SeqKind::Hooked, SeqKind::Split, SeqKind::Langford,
                      SeqKind::HookedLangford})
        if (name == to_string(k)) {
            out = k;
            return true;
        }
    return false;
}

std::vector<int> ground_set(SeqKind kind, int t) {
    std::vector<int> g;
    switch (kind) {
        case SeqKind::Skolem:
        case SeqKind::Langford:
            for (int i = 1; i <= 2 * t; ++i) g.push_back(i);
            break;
        case SeqKind::Hooked:
        case SeqKind::HookedLangford:
            for (int i = 1; i <= 2 * t - 1; ++i) g.push_back(i);
            g.push_back(2 * t + 1);
            break;
        case SeqKind::Split:
            for (int i = 1; i <= t; ++i) g.push_back(i);
            for (int i = t + 2; i <= 2 * t + 1; ++i) g.push_back(i);
            break;
    }
    return g;
}

SeqReport validate(const PairSequence& seq) {
    SeqReport rep;
    auto flag = [&rep](std::string s) {
        rep.ok = false;
        rep.violations.push_back(std::move(s));
    };
    if (seq.t < 1) flag("order below 1");
    bool langford = seq.kind == SeqKind::Langford || seq.kind == SeqKind::HookedLangford;
    if (!langford && seq.d != 1) flag("defect must be 1 for non-Langford kinds");
    if ((int)seq.pairs.size() != seq.t)
        flag("expected " + std::to_string(seq.t) + " pairs, got " +
             std::to_string(seq.pairs.size()));
    std::vector<int> endpoints;
    for (int i = 0; i < (int)seq.pairs.size(); ++i) {
        int r = seq.d + i;
        auto [a, b] = seq.pairs[i];
        if (b - a != r)
            flag("pair for difference " + std::to_string(r) + " is (" + std::to_string(a) + "," +
                 std::to_string(b) + "), b-a != r");
        endpoints.push_back(a);
        endpoints.push_back(b);
    }
    std::sort(endpoints.begin(), endpoints.end());
    auto want = ground_set(seq.kind, seq.t);
    if (endpoints != want) flag("endpoints do not tile the ground set");
    return rep;
}

bool exists(SeqKind kind, int t, int d) {
    if (t < 1 || d < 1) return false;
    switch (kind) {
        case SeqKind::Skolem: return t % 4 == 0 || t % 4 == 1;
        case SeqKind::Hooked: return t % 4 == 2 || t % 4 == 3;
        case SeqKind::Split: return t % 4 == 0 || t % 4 == 3;
        case SeqKind::Langford:
            if (t < 2 * d - 1) return false;
            return (d % 2 == 1) ? (t % 4 == 0 || t % 4 == 1) : (t % 4 == 0 || t % 4 == 3);
        case SeqKind::HookedLangford:
            if (static_cast<long>(t) * (t - 2 * d + 1) < -2) return false;
            return (d % 2 == 1) ? (t % 4 == 2 || t % 4 == 3) : (t % 4 == 1 || t % 4 == 2);
    }
    return false;
}

namespace {

struct SeqSearch {
    int t, d;
    int limit;                 // ground set spans 1..limit
    std::vector<char> free_;   // free_[x] for x in 1..limit
    std::vector<std::pair<int, int>> placed;  // by descending difference
    std::mt19937_64 rng;

    bool place(int idx) {  // idx over differences r = d+t-1-idx downwards
        if (idx == t) return true;
        const int r = d + t - 1 - idx;
        std::vector<int> starts;
        for (int a = 1; a + r <= limit; ++a)
            if (free_[a] && free_[a + r]) starts.push_back(a);
        std::shuffle(starts.begin(), starts.end(), rng);
        for (int a : starts) {
            free_[a] = free_[a + r] = 0;
            placed.push_back({a, a + r});
            if (place(idx + 1)) return true;
            placed.pop_back();
            free_[a] = free_[a + r] = 1;
        }
        return false;
    }
};

}  // namespace

PairSequence generate(SeqKind kind, int t, int d, uint64_t seed) {
    if (!exists(kind, t, d))
        throw std::domain_error(std::string("no ") + to_string(kind) + " sequence of order " +
                                std::to_string(t) + " defect " + std::to_string(d));
    auto ground = ground_set(kind, t);
    SeqSearch s;
    s.t = t;
    s.d = (kind == SeqKind::Langford || kind == SeqKind::HookedLangford) ? d : 1;
    s.limit = ground.back();
    s.free_.assign(s.limit + 1, 0);
    for (int x : ground) s.free_[x] = 1;
    s.rng.seed(seed);
    if (!s.place(0))
        throw std::runtime_error("sequence search exhausted unexpectedly");
    PairSequence seq;
    seq.kind = kind;
    seq.t = t;
    seq.d = s.d;
    seq.pairs.assign(t, {0, 0});
    for (int idx = 0; idx < t; ++idx) {
        int r = s.d + t - 1 - idx;
        seq.pairs[r - s.d] = s.placed[idx];
    }
    return seq;
}

namespace {

PairSequence shifted(const PairSequence& in, int s) {
    PairSequence out = in;
    for (auto& [a, b] : out.pairs) {
        a += s;
        b += s;
    }
    return out;
}

PairSequence explicit_seq(SeqKind kind, int t, std::vector<std::pair<int, int>> pairs) {
    PairSequence seq;
    seq.kind = kind;
    seq.t = t;
    seq.d = 1;
    seq.pairs = std::move(pairs);
    return seq;
}

}  // namespace

PairSequence special_skolem(int t) {
    if (t < 1 || (t % 4 != 0 && t % 4 != 1))
        throw std::domain_error("special skolem sequence requires t = 0,1 (mod 4)");
    if (t == 1) return explicit_seq(SeqKind::Skolem, 1, {{1, 2}});
    PairSequence lang = generate(SeqKind::Langford, t - 1, 2, 7);
    PairSequence out;
    out.kind = SeqKind::Skolem;
    out.t = t;
    out.d = 1;
    out.pairs.assign(t, {0, 0});
    out.pairs[0] = {1, 2};
    PairSequence sh = shifted(lang, 2);
    for (int r = 2; r <= t; ++r) out.pairs[r - 1] = sh.pair_for(r);
    return out;
}

PairSequence special_hooked(int t) {
    if (t < 6 || (t % 4 != 2 && t % 4 != 3))
        throw std::domain_error("special hooked skolem sequence requires t >= 6, t = 2,3 (mod 4)");
    switch (t) {
        case 6:
            return explicit_seq(SeqKind::Hooked, 6,
                                {{9, 10}, {1, 3}, {4, 7}, {2, 6}, {8, 13}, {5, 11}});
        case 7:
            return explicit_seq(SeqKind::Hooked, 7,
                                {{5, 6}, {1, 3}, {10, 13}, {8, 12}, {2, 7}, {9, 15}, {4, 11}});
        case 10:
            return explicit_seq(SeqKind::Hooked, 10,
                                {{4, 5},
                                 {1, 3},
                                 {9, 12},
                                 {11, 15},
                                 {2, 7},
                                 {13, 19},
                                 {14, 21},
                                 {10, 18},
                                 {8, 17},
                                 {6, 16}});
        case 11:
            return explicit_seq(SeqKind::Hooked, 11,
                                {{4, 5},
                                 {1, 3},
                                 {6, 9},
                                 {17, 21},
                                 {14, 19},
                                 {10, 16},
                                 {8, 15},
                                 {12, 20},
                                 {2, 11},
                                 {13, 23},
                                 {7, 18}});
        default: break;
    }
    // {(6,7),(1,3),(2,5),(4,8)} plus a hooked Langford of order t-4, defect 5,
    // shifted up by 8
    PairSequence hl = generate(SeqKind::HookedLangford, t - 4, 5, 7);
    PairSequence out;
    out.kind = SeqKind::Hooked;
    out.t = t;
    out.d = 1;
    out.pairs.assign(t, {0, 0});
    out.pairs[0] = {6, 7};
    out.pairs[1] = {1, 3};
    out.pairs[2] = {2, 5};
    out.pairs[3] = {4, 8};
    PairSequence sh = shifted(hl, 8);
    for (int r = 5; r <= t; ++r) out.pairs[r - 1] = sh.pair_for(r);
    return out;
}

PairSequence read_sequence(std::istream& in) {
    PairSequence seq;
    std::string kind_name;
    if (!(in >> kind_name >> seq.t >> seq.d))
        throw std::invalid_argument("sequence: bad header");
    if (!parse_seq_kind(kind_name, seq.kind))
        throw std::invalid_argument("sequence: unknown kind " + kind_name);
    if (seq.t < 1) throw std::invalid_argument("sequence: bad order");
    seq.pairs.assign(seq.t, {0, 0});
    int r, a, b;
    while (in >> r >> a >> b) {
        if (r < seq.d || r >= seq.d + seq.t)
            throw std::invalid_argument("sequence: difference out of range");
        seq.pairs[r - seq.d] = {a, b};
    }
    return seq;
}

std::string write_sequence(const PairSequence& seq) {
    std::ostringstream out;
    out << to_string(seq.kind) << " " << seq.t << " " << seq.d << "\n";
    for (int i = 0; i < (int)seq.pairs.size(); ++i)
        out << (seq.d + i) << " " << seq.pairs[i].first << " " << seq.pairs[i].second << "\n";
    return out.str();
}

}  // namespace nofil
