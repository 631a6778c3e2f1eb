#pragma once

#include <iosfwd>
#include <string>

#include "nofil/core.hpp"

namespace nofil {

// STS text format: first line "v=<int>", then one block per line with three
// whitespace-separated labels. '#' starts a comment. Byte-stable output.
std::string write_sts(const TripleSystem& ts);
TripleSystem read_sts(std::istream& in);
TripleSystem read_sts_file(const std::string& path);

// Certificate text format: "P:", "A:", "U:" one line each, "EDGES:" with one
// "x y" pair per line, then "BLOCKS:" followed by block lines.
std::string write_certificate(const EmbeddingCertificate& cert);
EmbeddingCertificate read_certificate(std::istream& in);
EmbeddingCertificate read_certificate_file(const std::string& path);
EmbeddingCertificate parse_certificate(const std::string& text);

void write_file(const std::string& path, const std::string& content);

}  // namespace nofil
