#pragma once

// Persisted scan records: CSV (columns q,weights,alpha,N,K,delta,delta_method,defect)
// and JSON lines (one record per line, including the timestamp).

#include <chrono>
#include <cstdint>
#include <ctime>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "wptcodes/error.hpp"

namespace wpt {

enum class DeltaMethod { Formula, Exhaustive, BoundOnly };

inline const char* to_string(DeltaMethod m) {
  switch (m) {
    case DeltaMethod::Formula: return "Formula";
    case DeltaMethod::Exhaustive: return "Exhaustive";
    case DeltaMethod::BoundOnly: return "BoundOnly";
  }
  return "?";
}

inline DeltaMethod parse_delta_method(const std::string& s) {
  if (s == "Formula") return DeltaMethod::Formula;
  if (s == "Exhaustive") return DeltaMethod::Exhaustive;
  if (s == "BoundOnly") return DeltaMethod::BoundOnly;
  throw Error(ErrorKind::Parse, "unknown delta method '" + s + "'");
}

struct ScanRecord {
  std::int64_t q = 0;
  std::vector<std::int64_t> weights;
  std::int64_t alpha = 0;
  std::int64_t length = 0;
  std::int64_t dimension = 0;
  std::int64_t distance = 0;
  DeltaMethod delta_method = DeltaMethod::Formula;
  std::int64_t singleton_defect = 0;
  /// ISO-8601 UTC; empty when read back from CSV, which has no timestamp column.
  std::string timestamp;

  auto key() const { return std::tie(q, weights, alpha); }

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string join_weights(const std::vector<std::int64_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad integer '" + tok + "' in list '" + s + "'");
    }
    if (used != tok.size()) throw Error(ErrorKind::Parse, "bad integer '" + tok + "' in list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

inline constexpr const char* csv_header = "q,weights,alpha,N,K,delta,delta_method,defect";

inline std::string to_csv_line(const ScanRecord& r) {
  std::ostringstream os;
  os << r.q << ",\"" << join_weights(r.weights) << "\"," << r.alpha << ',' << r.length << ',' << r.dimension << ','
     << r.distance << ',' << to_string(r.delta_method) << ',' << r.singleton_defect;
  return os.str();
}

namespace detail {

// RFC 4180 field splitting (quotes, doubled quotes).
inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (quoted) throw Error(ErrorKind::Parse, "unterminated quote in CSV line");
  out.push_back(std::move(cur));
  return out;
}

inline std::int64_t parse_int(const std::string& s) {
  auto v = parse_int_list(s);
  if (v.size() != 1) throw Error(ErrorKind::Parse, "expected one integer, got '" + s + "'");
  return v[0];
}

}  // namespace detail

inline ScanRecord parse_csv_line(const std::string& line) {
  const auto f = detail::split_csv(line);
  if (f.size() != 8) throw Error(ErrorKind::Parse, "CSV record needs 8 fields: " + line);
  ScanRecord r;
  r.q = detail::parse_int(f[0]);
  r.weights = parse_int_list(f[1]);
  r.alpha = detail::parse_int(f[2]);
  r.length = detail::parse_int(f[3]);
  r.dimension = detail::parse_int(f[4]);
  r.distance = detail::parse_int(f[5]);
  r.delta_method = parse_delta_method(f[6]);
  r.singleton_defect = detail::parse_int(f[7]);
  return r;
}

inline nlohmann::json to_json(const ScanRecord& r) {
  return {{"q", r.q},
          {"weights", r.weights},
          {"alpha", r.alpha},
          {"N", r.length},
          {"K", r.dimension},
          {"delta", r.distance},
          {"delta_method", to_string(r.delta_method)},
          {"singleton_defect", r.singleton_defect},
          {"timestamp", r.timestamp}};
}

inline ScanRecord scan_record_from_json(const nlohmann::json& j) {
  try {
    ScanRecord r;
    r.q = j.at("q").get<std::int64_t>();
    r.weights = j.at("weights").get<std::vector<std::int64_t>>();
    r.alpha = j.at("alpha").get<std::int64_t>();
    r.length = j.at("N").get<std::int64_t>();
    r.dimension = j.at("K").get<std::int64_t>();
    r.distance = j.at("delta").get<std::int64_t>();
    r.delta_method = parse_delta_method(j.at("delta_method").get<std::string>());
    r.singleton_defect = j.at("singleton_defect").get<std::int64_t>();
    r.timestamp = j.value("timestamp", "");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad scan record: ") + e.what());
  }
}

enum class RecordFormat { Csv, JsonLines };

/// Reads all records; a CSV stream must start with the header line.
inline std::vector<ScanRecord> read_records(std::istream& is, RecordFormat fmt) {
  std::vector<ScanRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    if (fmt == RecordFormat::Csv) {
      if (first) {
        first = false;
        if (line.rfind(csv_header, 0) != 0) throw Error(ErrorKind::Parse, "missing CSV header");
        continue;
      }
      out.push_back(parse_csv_line(line));
    } else {
      try {
        out.push_back(scan_record_from_json(nlohmann::json::parse(line)));
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, std::string("bad JSON line: ") + e.what());
      }
    }
  }
  return out;
}

inline void write_record(std::ostream& os, const ScanRecord& r, RecordFormat fmt) {
  if (fmt == RecordFormat::Csv)
    os << to_csv_line(r) << '\n';
  else
    os << to_json(r).dump() << '\n';
}

}  // namespace wpt
