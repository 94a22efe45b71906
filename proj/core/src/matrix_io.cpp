#include "minherm/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minherm {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("failed writing '" + path + "'");
}

Complex parse_entry(const json& cell, std::size_t row, std::size_t col) {
  std::ostringstream where;
  where << "entry (" << row + 1 << "," << col + 1 << ")";
  if (!cell.is_array() || cell.size() != 2) {
    throw ParseError(where.str() + ": expected a [re, im] pair");
  }
  if (!cell[0].is_number() || !cell[1].is_number()) {
    throw ParseError(where.str() + ": re/im fields must be numbers");
  }
  return Complex(cell[0].get<double>(), cell[1].get<double>());
}

HermitianMatrix matrix_from_parsed(const json& j) {
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("missing integer field \"n\"");
  }
  const long long n_signed = j["n"].get<long long>();
  if (n_signed < 1) throw ParseError("field \"n\" must be >= 1");
  const std::size_t n = static_cast<std::size_t>(n_signed);
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw ParseError("missing array field \"entries\"");
  }
  const json& rows = j["entries"];
  if (rows.size() != n) {
    std::ostringstream msg;
    msg << "expected " << n << " rows, found " << rows.size();
    throw ParseError(msg.str());
  }
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " has " << (row.is_array() ? row.size() : 0) << " entries, expected " << n;
      throw ParseError(msg.str());
    }
    for (std::size_t k = 0; k < n; ++k) m(i, k) = parse_entry(row[k], i, k);
  }
  return hermitian_from_entries(m);
}

json matrix_to_parsed(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", n}, {"entries", std::move(rows)}};
}

}  // namespace

HermitianMatrix read_matrix(const std::string& path) { return matrix_from_parsed(parse_file(path)); }

void write_matrix(const std::string& path, const HermitianMatrix& m) {
  write_file(path, matrix_to_parsed(m));
}

HermitianMatrix matrix_from_json(const std::string& text) {
  try {
    return matrix_from_parsed(json::parse(text));
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string matrix_to_json(const HermitianMatrix& m) { return matrix_to_parsed(m).dump(2); }

RealVector read_real_vector(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
    throw ParseError(path + ": expected an object with array field \"values\"");
  }
  RealVector v;
  v.reserve(j["values"].size());
  for (const json& x : j["values"]) {
    if (!x.is_number()) throw ParseError(path + ": \"values\" must contain numbers only");
    v.push_back(x.get<double>());
  }
  return v;
}

void write_real_vector(const std::string& path, const RealVector& v) {
  write_file(path, json{{"values", v}});
}

}  // namespace minherm
