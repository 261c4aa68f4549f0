#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rinclose/bicluster.hpp"
#include "rinclose/matrix.hpp"

namespace rinclose::io {

/// Parses CSV or TSV text (delimiter picked from the first data line: tab if
/// present, comma otherwise). Blank lines are skipped. With `has_header` the
/// first nonblank line is ignored. Throws std::runtime_error with a line
/// number on malformed input.
NumericMatrix parse_matrix(std::istream& in, bool has_header = false);
NumericMatrix read_matrix(const std::filesystem::path& path, bool has_header = false);

/// Comma-separated, 17 significant digits so values round-trip exactly.
void write_matrix(std::ostream& out, const NumericMatrix& matrix);
void write_matrix(const std::filesystem::path& path, const NumericMatrix& matrix);

/// JSON array of {"rows":[...],"cols":[...]} objects.
std::string biclusters_to_json(const std::vector<Bicluster>& bics);
std::vector<Bicluster> biclusters_from_json(const std::string& text);
std::vector<Bicluster> read_biclusters(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace rinclose::io
