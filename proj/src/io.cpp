#include "rinclose/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rinclose::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_cell(const std::string& raw, std::size_t line_no) {
  const std::string cell = trim(raw);
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = cell.data() + cell.size();
  if (!cell.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (cell.empty() || ec != std::errc() || ptr != end) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": cannot parse '" + cell +
                             "' as a number");
  }
  return value;
}

}  // namespace

NumericMatrix parse_matrix(std::istream& in, bool has_header) {
  std::vector<double> values;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  char delim = 0;
  bool header_pending = has_header;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    if (delim == 0) delim = line.find('\t') != std::string::npos ? '\t' : ',';
    std::size_t count = 0;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, delim)) {
      values.push_back(parse_cell(field, line_no));
      ++count;
    }
    if (n_rows == 0) {
      n_cols = count;
    } else if (count != n_cols) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(n_cols) + " cells, found " +
                               std::to_string(count));
    }
    ++n_rows;
  }
  if (n_rows == 0) throw std::runtime_error("matrix input has no data rows");
  try {
    return NumericMatrix(n_rows, n_cols, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

NumericMatrix read_matrix(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_matrix(in, has_header);
}

void write_matrix(std::ostream& out, const NumericMatrix& matrix) {
  out << std::setprecision(17);
  for (Index i = 0; i < matrix.rows(); ++i) {
    for (Index j = 0; j < matrix.cols(); ++j) {
      if (j) out << ',';
      out << matrix(i, j);
    }
    out << '\n';
  }
}

void write_matrix(const std::filesystem::path& path, const NumericMatrix& matrix) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_matrix(out, matrix);
}

std::string biclusters_to_json(const std::vector<Bicluster>& bics) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& b : bics) arr.push_back({{"rows", b.rows}, {"cols", b.cols}});
  return arr.dump() + "\n";
}

std::vector<Bicluster> biclusters_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bicluster JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::runtime_error("bicluster JSON must be an array");
  std::vector<Bicluster> out;
  out.reserve(doc.size());
  for (const auto& item : doc) {
    try {
      out.push_back(make_bicluster(item.at("rows").get<IndexList>(),
                                   item.at("cols").get<IndexList>()));
    } catch (const std::exception& e) {
      throw std::runtime_error("bicluster JSON entry " + std::to_string(out.size()) + ": " +
                               e.what());
    }
  }
  return out;
}

std::vector<Bicluster> read_biclusters(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return biclusters_from_json(buf.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace rinclose::io
