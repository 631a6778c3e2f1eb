#include "nofil/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nofil {
namespace {

// numeric-friendly deterministic label order: shorter first, then lexicographic
bool label_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::array<std::string, 3> block_labels_sorted(const TripleSystem& ts, const Block& b) {
    std::array<std::string, 3> s{ts.points[b.pts[0]], ts.points[b.pts[1]], ts.points[b.pts[2]]};
    std::sort(s.begin(), s.end(), label_less);
    return s;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

}  // namespace

std::string write_sts(const TripleSystem& ts) {
    std::ostringstream out;
    out << "v=" << ts.v() << "\n";
    std::vector<std::array<std::string, 3>> lines;
    lines.reserve(ts.blocks.size());
    for (const auto& b : ts.blocks) lines.push_back(block_labels_sorted(ts, b));
    std::sort(lines.begin(), lines.end(), [](const auto& x, const auto& y) {
        for (int i = 0; i < 3; ++i)
            if (x[i] != y[i]) return label_less(x[i], y[i]);
        return false;
    });
    for (const auto& l : lines) out << l[0] << " " << l[1] << " " << l[2] << "\n";
    return out.str();
}

TripleSystem read_sts(std::istream& in) {
    std::string line;
    int v = -1;
    std::vector<std::array<std::string, 3>> blocks;
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> seen;
    auto touch = [&](const std::string& lbl) {
        if (seen.emplace(lbl, 0).second) labels.push_back(lbl);
    };
    while (std::getline(in, line)) {
        auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        if (v < 0) {
            if (toks.size() != 1 || toks[0].rfind("v=", 0) != 0)
                throw std::invalid_argument("sts: expected v=<int> header");
            v = std::stoi(toks[0].substr(2));
            continue;
        }
        if (toks.size() != 3) throw std::invalid_argument("sts: block line needs 3 labels");
        touch(toks[0]);
        touch(toks[1]);
        touch(toks[2]);
        blocks.push_back({toks[0], toks[1], toks[2]});
    }
    if (v < 0) throw std::invalid_argument("sts: missing v= header");
    // points that occur only in the header count: label 1..v gap-fill is not
    // attempted; all points must appear in some block for a valid STS anyway
    if ((int)labels.size() != v) {
        // tolerate numeric-labelled systems listing no isolated points
        if ((int)labels.size() > v) throw std::invalid_argument("sts: more labels than v");
        throw std::invalid_argument("sts: header v does not match distinct labels");
    }
    return make_triple_system(std::move(labels), blocks);
}

TripleSystem read_sts_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_sts(f);
}

std::string write_certificate(const EmbeddingCertificate& cert) {
    std::ostringstream out;
    const auto& ts = cert.ts;
    auto dump = [&](const char* name, PointClass c) {
        std::vector<std::string> lbls;
        for (int x = 0; x < ts.v(); ++x)
            if (cert.partition.cls[x] == c) lbls.push_back(ts.points[x]);
        std::sort(lbls.begin(), lbls.end(), label_less);
        out << name << ":";
        for (const auto& l : lbls) out << " " << l;
        out << "\n";
    };
    dump("P", PointClass::Played);
    dump("A", PointClass::Available);
    dump("U", PointClass::Unplayable);
    out << "EDGES:\n";
    std::vector<std::array<std::string, 2>> elines;
    for (auto [i, j] : cert.graph.edges) {
        std::array<std::string, 2> e{cert.graph.vertices[i], cert.graph.vertices[j]};
        if (!label_less(e[0], e[1])) std::swap(e[0], e[1]);
        elines.push_back(e);
    }
    std::sort(elines.begin(), elines.end(), [](const auto& x, const auto& y) {
        if (x[0] != y[0]) return label_less(x[0], y[0]);
        return label_less(x[1], y[1]);
    });
    for (const auto& e : elines) out << e[0] << " " << e[1] << "\n";
    std::string sts_text = write_sts(ts);
    out << "BLOCKS:\n" << sts_text.substr(sts_text.find('\n') + 1);
    return out.str();
}

EmbeddingCertificate read_certificate(std::istream& in) {
    std::vector<std::string> P, A, U;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::array<std::string, 3>> blocks;
    enum class Sec { None, Edges, Blocks } sec = Sec::None;
    std::string line;
    while (std::getline(in, line)) {
        auto raw = strip_comment(line);
        auto toks = tokens(raw);
        if (toks.empty()) continue;
        if (toks[0] == "P:" || toks[0].rfind("P:", 0) == 0) {
            auto rest = tokens(raw.substr(raw.find(':') + 1));
            P = rest;
            sec = Sec::None;
            continue;
        }
        if (toks[0] == "A:" || toks[0].rfind("A:", 0) == 0) {
            A = tokens(raw.substr(raw.find(':') + 1));
            sec = Sec::None;
            continue;
        }
        if (toks[0] == "U:" || toks[0].rfind("U:", 0) == 0) {
            U = tokens(raw.substr(raw.find(':') + 1));
            sec = Sec::None;
            continue;
        }
        if (toks[0] == "EDGES:") {
            sec = Sec::Edges;
            continue;
        }
        if (toks[0] == "BLOCKS:") {
            sec = Sec::Blocks;
            continue;
        }
        if (sec == Sec::Edges) {
            if (toks.size() != 2) throw std::invalid_argument("cert: edge line needs 2 labels");
            edges.emplace_back(toks[0], toks[1]);
        } else if (sec == Sec::Blocks) {
            if (toks.size() != 3) throw std::invalid_argument("cert: block line needs 3 labels");
            blocks.push_back({toks[0], toks[1], toks[2]});
        } else {
            throw std::invalid_argument("cert: stray line: " + line);
        }
    }
    std::vector<std::string> all;
    all.insert(all.end(), P.begin(), P.end());
    all.insert(all.end(), A.begin(), A.end());
    all.insert(all.end(), U.begin(), U.end());
    EmbeddingCertificate cert;
    cert.ts = make_triple_system(all, blocks);
    cert.partition = make_partition(cert.ts, P, A, U);
    cert.graph = make_graph(A, edges);
    return cert;
}

EmbeddingCertificate parse_certificate(const std::string& text) {
    std::istringstream ss(text);
    return read_certificate(ss);
}

EmbeddingCertificate read_certificate_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_certificate(f);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
}

}  // namespace nofil
