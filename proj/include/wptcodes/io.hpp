#pragma once

// Text and JSON forms of points, binomials and generator matrices.
//
// Matrix text format: one row per line, residues separated by single spaces.
// Matrix JSON format:
//   {"schema":1,"q":5,"rows":K,"cols":N,"entries":[[...],...],"row_monomials":[[m0,...],...]}

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wptcodes/code.hpp"
#include "wptcodes/error.hpp"
#include "wptcodes/ideal.hpp"
#include "wptcodes/torus.hpp"

namespace wpt {

inline nlohmann::json to_json(const Point& p) {
  auto arr = nlohmann::json::array();
  for (auto c : p.coords) arr.push_back(c.value);
  return arr;
}

inline nlohmann::json to_json(const PointSet& pts) {
  auto arr = nlohmann::json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

inline nlohmann::json to_json(const Binomial& b) {
  return {{"lead", b.lead.exponents}, {"trail", b.trail.exponents}};
}

inline void write_matrix_text(std::ostream& os, const GeneratorMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m.at(r, c);
    }
    os << '\n';
  }
}

/// Reads the text format; blank lines are ignored and all rows must have equal length.
inline GeneratorMatrix read_matrix_text(std::istream& is, const PrimeField& field) {
  std::vector<std::uint32_t> entries;
  std::size_t rows = 0, cols = 0;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<std::uint32_t> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad matrix entry '" + tok + "'");
      }
      if (used != tok.size() || v >= field.q()) throw Error(ErrorKind::Parse, "bad matrix entry '" + tok + "'");
      row.push_back(static_cast<std::uint32_t>(v));
    }
    if (row.empty()) continue;
    if (rows == 0) cols = row.size();
    if (row.size() != cols) throw Error(ErrorKind::Parse, "ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  return GeneratorMatrix(field, rows, cols, std::move(entries));
}

inline nlohmann::json to_json(const GeneratorMatrix& m) {
  nlohmann::json j;
  j["schema"] = 1;
  j["q"] = m.field().q();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<std::uint32_t>(row.begin(), row.end()));
  }
  j["entries"] = rows;
  auto mons = nlohmann::json::array();
  for (const auto& mon : m.row_monomials()) mons.push_back(mon.exponents);
  j["row_monomials"] = mons;
  return j;
}

inline GeneratorMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const PrimeField field(j.at("q").get<std::uint64_t>());
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    std::vector<std::uint32_t> entries;
    for (const auto& row : j.at("entries")) {
      if (row.size() != cols) throw Error(ErrorKind::Parse, "matrix row has wrong length");
      for (const auto& v : row) entries.push_back(v.get<std::uint32_t>());
    }
    if (entries.size() != rows * cols) throw Error(ErrorKind::Parse, "matrix row count mismatch");
    return GeneratorMatrix(field, rows, cols, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad matrix JSON: ") + e.what());
  }
}

}  // namespace wpt
