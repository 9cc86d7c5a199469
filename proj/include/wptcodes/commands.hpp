#pragma once

// Implementations behind the `wptcodes` subcommands. Each command returns its
// stdout text and exit code (0 ok, 2 bad input, 3 verification failure) so it can
// be exercised without a process boundary.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "wptcodes/code.hpp"
#include "wptcodes/distance.hpp"
#include "wptcodes/error.hpp"
#include "wptcodes/formulas.hpp"
#include "wptcodes/hilbert.hpp"
#include "wptcodes/ideal.hpp"
#include "wptcodes/io.hpp"
#include "wptcodes/parallel.hpp"
#include "wptcodes/published.hpp"
#include "wptcodes/records.hpp"
#include "wptcodes/torus.hpp"
#include "wptcodes/wps.hpp"

namespace wpt::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_verify_failed = 3;

struct RunOptions {
  std::uint64_t budget = default_search_budget;
  unsigned threads = 0;
};

struct CommandResult {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

inline CommandResult usage_error(const std::string& msg) { return {exit_usage, "", msg + "\n"}; }

/// Length |Y_Q| = d_1 ... d_n.
inline std::int64_t length_formula(const WeightedSpace& space) {
  std::int64_t n = 1;
  for (std::size_t i = 1; i <= space.n(); ++i) n = detail::checked_mul(n, space.order(i));
  return n;
}

/// Closed-form view of C_{alpha,Y_Q}; falls back to exhaustive search (within
/// budget) where no exact distance formula applies.
inline CodeSummary summarize(const WeightedSpace& space, std::int64_t alpha, const RunOptions& opts) {
  if (space.weight(0) != 1) throw Error(ErrorKind::UnsupportedWeight, "formulas require w0 = 1");
  if (alpha < 0) throw Error(ErrorKind::OutOfRange, "alpha must be nonnegative");
  CodeSummary s;
  s.alpha = alpha;
  s.length = length_formula(space);
  if (is_P11a(space)) {
    const auto ctx = make_P11a_context(space, alpha);
    s.dimension = dimension_P11a(ctx);
    s.distance = distance_P11a(ctx);
    return s;
  }
  s.dimension = dimension_nested_sum(space, alpha);
  std::optional<std::int64_t> bound;
  if (space.n() == 2) {
    const auto b = distance_bounds_P1w1w2(make_P1w1w2_context(space, alpha));
    if (b.exact) {
      s.distance = b.value;
      return s;
    }
    bound = b.value;
  } else if (alpha > a_invariant_YQ(space)) {
    s.distance = 1;
    return s;
  }
  try {
    const auto pts = enumerate_YQ(space);
    s.distance = min_distance_exhaustive(generator_matrix(space, alpha, pts), {opts.budget, opts.threads});
    s.distance_from = Provenance::Exhaustive;
  } catch (const BudgetExceededError&) {
    if (bound) {
      s.distance = bound;
      s.distance_from = Provenance::BoundOnly;
    }
  }
  return s;
}

inline std::vector<std::int64_t> parse_weights_arg(const std::string& s) {
  auto w = parse_int_list(s);
  if (w.empty()) throw Error(ErrorKind::InvalidWeights, "empty weight list");
  return w;
}

// ---------------------------------------------------------------------------
// params

inline CommandResult cmd_params(std::uint64_t q, const std::vector<std::int64_t>& weights, std::int64_t alpha,
                                bool verify, const RunOptions& opts) {
  std::ostringstream os;
  bool failed = false;
  try {
    const WeightedSpace space(make_field(q), weights);
    const auto s = summarize(space, alpha, opts);
    os << s.bracket() << '\n';
    os << "space " << space.describe() << ", alpha " << alpha << '\n';
    os << "N = " << s.length << " (" << to_string(s.length_from) << ")\n";
    os << "K = " << s.dimension << " (" << to_string(s.dimension_from) << ")\n";
    if (s.distance)
      os << "delta " << (s.distance_from == Provenance::BoundOnly ? "<= " : "= ") << *s.distance << " ("
         << to_string(s.distance_from) << ")\n";
    else
      os << "delta unknown (exhaustive search over budget)\n";
    if (verify) {
      const auto pts = enumerate_YQ(space);
      const auto g = generator_matrix(space, alpha, pts);
      const auto k = static_cast<std::int64_t>(rank(g));
      auto line = [&](const char* what, bool ok, const std::string& detail) {
        os << "verify " << what << ": " << (ok ? "PASS" : "FAIL") << " (" << detail << ")\n";
        failed = failed || !ok;
      };
      line("N", static_cast<std::int64_t>(pts.size()) == s.length, "points " + std::to_string(pts.size()));
      line("K", k == s.dimension, "rank " + std::to_string(k));
      if (k == 0) {
        os << "verify delta: SKIPPED (empty code)\n";
      } else {
        try {
          const auto d = min_distance_exhaustive(g, {opts.budget, opts.threads});
          const bool ok = !s.distance || (s.distance_from == Provenance::BoundOnly ? d <= *s.distance : d == *s.distance);
          line("delta", ok, "exhaustive " + std::to_string(d));
        } catch (const BudgetExceededError& e) {
          if (k == s.length)
            line("delta", s.distance == 1, "full space contains weight-1 words");
          else
            os << "verify delta: SKIPPED (" << e.what() << ")\n";
        }
      }
    }
  } catch (const Error& e) {
    return usage_error(e.what());
  }
  return {failed ? exit_verify_failed : exit_ok, os.str(), ""};
}

// ---------------------------------------------------------------------------
// table

enum class TableFormat { Markdown, Csv, Json };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "md" || s == "markdown") return TableFormat::Markdown;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  throw Error(ErrorKind::Parse, "unknown format '" + s + "' (expected md, csv or json)");
}

struct TableRow {
  CodeSummary summary;
  std::optional<PublishedRow> published;
  bool discrepancy = false;
};

/// Rows alpha = 0..alpha_max for P(1,1,a) over F_q, compared against published values when known.
inline std::vector<TableRow> build_table(std::uint64_t q, std::int64_t a, std::int64_t alpha_max,
                                         const RunOptions& opts) {
  const WeightedSpace space(make_field(q), {1, 1, a});
  if (alpha_max < 0) throw Error(ErrorKind::OutOfRange, "alpha-max must be nonnegative");
  std::vector<TableRow> rows;
  for (std::int64_t alpha = 0; alpha <= alpha_max; ++alpha) {
    TableRow r;
    r.summary = summarize(space, alpha, opts);
    r.published = published_row(q, a, alpha);
    if (r.published)
      r.discrepancy = r.published->length != r.summary.length || r.published->dimension != r.summary.dimension ||
                      r.published->distance != *r.summary.distance;
    rows.push_back(r);
  }
  return rows;
}

inline std::string render_table(std::uint64_t q, std::int64_t a, const std::vector<TableRow>& rows, TableFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case TableFormat::Markdown:
      os << "| alpha | N | K | delta | code | note |\n";
      os << "|---:|---:|---:|---:|---|---|\n";
      for (const auto& r : rows) {
        const auto& s = r.summary;
        os << "| " << s.alpha << " | " << s.length << " | " << s.dimension << " | " << *s.distance << " | "
           << s.bracket() << " | ";
        if (r.discrepancy) os << "published " << r.published->bracket() << " differs";
        os << " |\n";
      }
      break;
    case TableFormat::Csv:
      os << "alpha,N,K,delta,published,discrepancy\n";
      for (const auto& r : rows) {
        const auto& s = r.summary;
        os << s.alpha << ',' << s.length << ',' << s.dimension << ',' << *s.distance << ','
           << (r.published ? "\"" + r.published->bracket() + "\"" : "") << ',' << (r.discrepancy ? 1 : 0) << '\n';
      }
      break;
    case TableFormat::Json: {
      nlohmann::json j;
      j["schema"] = 1;
      j["q"] = q;
      j["weights"] = {1, 1, a};
      auto arr = nlohmann::json::array();
      for (const auto& r : rows) {
        const auto& s = r.summary;
        nlohmann::json row = {{"alpha", s.alpha},
                              {"N", s.length},
                              {"K", s.dimension},
                              {"delta", *s.distance},
                              {"delta_method", to_string(s.distance_from)},
                              {"discrepancy", r.discrepancy}};
        row["published"] = r.published ? nlohmann::json(r.published->bracket()) : nlohmann::json(nullptr);
        arr.push_back(row);
      }
      j["rows"] = arr;
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

/// With verify, every row is re-derived from matrix rank and (within budget) exhaustive search.
inline CommandResult cmd_table(std::uint64_t q, std::int64_t a, std::int64_t alpha_max, TableFormat fmt, bool verify,
                               const RunOptions& opts) {
  try {
    const auto rows = build_table(q, a, alpha_max, opts);
    std::string err;
    bool failed = false;
    if (verify) {
      const WeightedSpace space(make_field(q), {1, 1, a});
      const auto pts = enumerate_YQ(space);
      for (const auto& r : rows) {
        const auto g = generator_matrix(space, r.summary.alpha, pts);
        const auto k = static_cast<std::int64_t>(rank(g));
        std::string status = k == r.summary.dimension ? "ok" : "K mismatch (rank " + std::to_string(k) + ")";
        try {
          const auto d = min_distance_exhaustive(g, {opts.budget, opts.threads});
          if (d != *r.summary.distance) status = "delta mismatch (exhaustive " + std::to_string(d) + ")";
        } catch (const BudgetExceededError&) {
          if (status == "ok") status = "ok (delta not searched: over budget)";
        }
        failed = failed || status.rfind("ok", 0) != 0;
        err += "alpha " + std::to_string(r.summary.alpha) + ": " + status + "\n";
      }
    }
    return {failed ? exit_verify_failed : exit_ok, render_table(q, a, rows, fmt), err};
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

// ---------------------------------------------------------------------------
// verify

struct CheckTally {
  explicit CheckTally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t skipped = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what) {
    if (ok) {
      ++pass;
    } else {
      ++fail;
      failures.push_back(what);
    }
  }
  std::string status() const { return fail ? "FAIL" : (pass ? "PASS" : "SKIPPED"); }
  nlohmann::json to_json() const {
    return {{"name", name},       {"status", status()},      {"pass", pass},
            {"fail", fail},       {"skipped", skipped},      {"failures", failures}};
  }
};

struct VerifyEntry {
  std::uint64_t q = 0;
  std::vector<std::int64_t> weights;
  std::string status;  // PASS, FAIL or UNSUPPORTED
  nlohmann::json detail;
};

/// Full cross-check of one space for alpha = 0 .. a_Y + alpha_offset.
inline VerifyEntry verify_space(std::uint64_t q, const std::vector<std::int64_t>& weights, std::int64_t alpha_offset,
                                std::uint64_t budget) {
  VerifyEntry entry{q, weights, "PASS", nlohmann::json::object()};
  const WeightedSpace space(make_field(q), weights);
  if (space.weight(0) != 1) {
    entry.status = "UNSUPPORTED";
    entry.detail["reason"] = "w0 != 1";
    return entry;
  }
  const auto pts = enumerate_YQ(space);
  const std::int64_t n_points = static_cast<std::int64_t>(pts.size());
  const std::int64_t a_y = a_invariant_YQ(space);

  CheckTally length{"length"}, vanishing{"vanishing_ideal"}, certificate{"complete_intersection"},
      dimension{"dimension_three_way"}, dim_formula{"dimension_closed_form"}, regularity{"regularity"},
      distance{"distance"}, trivial{"trivial_code"}, extremal{"extremal_codeword"}, monotone{"monotonicity"}, singleton{"singleton"};

  length.record(n_points == length_formula(space), "point count " + std::to_string(n_points));
  const auto gens = vanishing_ideal_generators(space);
  vanishing.record(verify_vanishing(gens, pts), "a generator does not vanish on Y_Q");
  const auto basis = lattice_basis_YQ(space);
  certificate.record(gens.size() == space.n() && is_mixed(basis) && is_dominating(basis),
                     "lattice basis is not mixed dominating");

  auto rows = nlohmann::json::array();
  std::optional<std::int64_t> prev_k, prev_delta;
  for (std::int64_t alpha = 0; alpha <= a_y + alpha_offset; ++alpha) {
    const std::string at = "alpha " + std::to_string(alpha);
    const auto g = generator_matrix(space, alpha, pts);
    const auto k = static_cast<std::int64_t>(rank(g));
    const auto nested = dimension_nested_sum(space, alpha);
    const auto hilb = hilbert_YQ(space, alpha);
    dimension.record(nested == hilb && hilb == k && k == static_cast<std::int64_t>(g.rows()),
                     at + ": nested " + std::to_string(nested) + ", hilbert " + std::to_string(hilb) + ", rank " +
                         std::to_string(k));
    regularity.record((k == n_points) == (alpha >= a_y + 1), at + ": rank " + std::to_string(k));

    // expected distance from closed forms
    std::optional<std::int64_t> exact, upper;
    if (is_P11a(space)) {
      const auto ctx = make_P11a_context(space, alpha);
      dim_formula.record(dimension_P11a(ctx) == nested, at + ": closed form " + std::to_string(dimension_P11a(ctx)));
      exact = distance_P11a(ctx);
    } else if (space.n() == 2) {
      const auto b = distance_bounds_P1w1w2(make_P1w1w2_context(space, alpha));
      (b.exact ? exact : upper) = b.value;
    } else if (alpha > a_y) {
      exact = 1;
    }

    nlohmann::json row = {{"alpha", alpha}, {"K", k}};
    std::optional<std::int64_t> delta;
    std::string method;
    try {
      delta = min_distance_exhaustive(g, {budget, 1});
      method = "Exhaustive";
    } catch (const BudgetExceededError&) {
      ++distance.skipped;
      if (k == n_points) {
        delta = 1;  // F_q^N contains weight-1 words
        method = "FullSpace";
        if (exact) trivial.record(*exact == 1, at + ": full space but formula gives " + std::to_string(*exact));
      }
    }
    if (delta && method == "Exhaustive") {
      if (exact)
        distance.record(*delta == *exact, at + ": found " + std::to_string(*delta) + ", formula " + std::to_string(*exact));
      else if (upper)
        distance.record(*delta <= *upper, at + ": found " + std::to_string(*delta) + " above bound " + std::to_string(*upper));
    } else if (!delta && exact) {
      delta = exact;
      method = "Formula";
    }
    if (delta) {
      row["delta"] = *delta;
      row["delta_method"] = method;
      singleton.record(n_points + 1 - k - *delta >= 0, at + ": Singleton violated");
      if (prev_delta) monotone.record(*delta <= *prev_delta, at + ": delta increased");
      prev_delta = delta;
    } else {
      row["delta"] = nullptr;
      row["delta_method"] = "Skipped";
    }
    if (prev_k) monotone.record(k >= *prev_k, at + ": K decreased");
    prev_k = k;

    if (is_P11a(space)) {
      if (auto word = extremal_codeword_P11a(space, alpha, pts)) {
        const auto w = static_cast<std::int64_t>(hamming_weight(*word));
        extremal.record(w == *exact && in_row_space(g, *word),
                        at + ": extremal word weight " + std::to_string(w) + " vs formula " + std::to_string(*exact));
      }
    }
    rows.push_back(row);
  }

  auto checks = nlohmann::json::array();
  for (const auto* t : {&length, &vanishing, &certificate, &dimension, &dim_formula, &regularity, &distance, &trivial, &extremal,
                        &monotone, &singleton}) {
    if (t->pass + t->fail + t->skipped == 0) continue;
    checks.push_back(t->to_json());
    if (t->fail) entry.status = "FAIL";
  }
  entry.detail = {{"N", n_points}, {"a_invariant", a_y}, {"checks", checks}, {"rows", rows}};
  return entry;
}

struct VerifyRequest {
  std::vector<std::uint64_t> qs;
  std::vector<std::vector<std::int64_t>> weight_sets;
  std::int64_t alpha_offset = 3;
};

inline CommandResult cmd_verify(const VerifyRequest& req, const RunOptions& opts) {
  std::vector<std::pair<std::uint64_t, std::vector<std::int64_t>>> jobs;
  try {
    for (auto q : req.qs) {
      make_field(q);
      for (const auto& w : req.weight_sets) {
        WeightedSpace(make_field(q), w);  // validates weights up front
        jobs.emplace_back(q, w);
      }
    }
    if (req.alpha_offset < 0) throw Error(ErrorKind::OutOfRange, "alpha offset must be nonnegative");
  } catch (const Error& e) {
    return usage_error(e.what());
  }
  const auto entries = parallel_map<VerifyEntry>(jobs.size(), opts.threads, [&](std::size_t i) {
    try {
      return verify_space(jobs[i].first, jobs[i].second, req.alpha_offset, opts.budget);
    } catch (const Error& e) {
      return VerifyEntry{jobs[i].first, jobs[i].second, "UNSUPPORTED", {{"reason", e.what()}}};
    }
  });
  nlohmann::json report;
  report["schema"] = 1;
  report["budget"] = opts.budget;
  report["alpha_offset"] = req.alpha_offset;
  std::int64_t pass = 0, fail = 0, unsupported = 0;
  auto arr = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j = e.detail;
    j["q"] = e.q;
    j["weights"] = e.weights;
    j["status"] = e.status;
    arr.push_back(j);
    pass += e.status == "PASS";
    fail += e.status == "FAIL";
    unsupported += e.status == "UNSUPPORTED";
  }
  report["entries"] = arr;
  report["summary"] = {{"pass", pass}, {"fail", fail}, {"unsupported", unsupported}};
  return {fail ? exit_verify_failed : exit_ok, report.dump(2) + "\n", ""};
}

// ---------------------------------------------------------------------------
// scan

inline RecordFormat record_format_for(const std::string& path, const std::string& format) {
  if (format == "csv") return RecordFormat::Csv;
  if (format == "json" || format == "jsonl") return RecordFormat::JsonLines;
  if (!format.empty()) throw Error(ErrorKind::Parse, "unknown scan format '" + format + "' (expected csv or json)");
  return std::filesystem::path(path).extension() == ".csv" ? RecordFormat::Csv : RecordFormat::JsonLines;
}

/// Records for P(1,1,a) with alpha in [0, a_Y + 1] whose Singleton defect is at most max_defect.
inline std::vector<ScanRecord> scan_records(const std::vector<std::uint64_t>& qs, const std::vector<std::int64_t>& as,
                                            std::int64_t max_defect, const std::string& timestamp) {
  std::vector<ScanRecord> out;
  for (auto q : qs)
    for (auto a : as) {
      const WeightedSpace space(make_field(q), {1, 1, a});
      const std::int64_t a_y = a_invariant_YQ(space);
      for (std::int64_t alpha = 0; alpha <= a_y + 1; ++alpha) {
        const auto ctx = make_P11a_context(space, alpha);
        ScanRecord r;
        r.q = static_cast<std::int64_t>(q);
        r.weights = {1, 1, a};
        r.alpha = alpha;
        r.length = ctx.length();
        r.dimension = dimension_P11a(ctx);
        r.distance = distance_P11a(ctx);
        r.delta_method = DeltaMethod::Formula;
        r.singleton_defect = r.length + 1 - r.dimension - r.distance;
        r.timestamp = timestamp;
        if (r.singleton_defect <= max_defect) out.push_back(std::move(r));
      }
    }
  return out;
}

/// Appends records not already present (keyed on q, weights, alpha) to `path`.
inline CommandResult cmd_scan(const std::vector<std::uint64_t>& qs, const std::vector<std::int64_t>& as,
                              const std::string& path, std::int64_t max_defect, const std::string& format) {
  try {
    if (path.empty()) throw Error(ErrorKind::Io, "scan needs --out PATH");
    const auto fmt = record_format_for(path, format);
    const auto fresh = scan_records(qs, as, max_defect, utc_timestamp());
    std::vector<ScanRecord> existing;
    bool has_content = false;
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
      has_content = std::filesystem::file_size(path) > 0;
      try {
        existing = read_records(in, fmt);
      } catch (const Error& e) {
        throw Error(ErrorKind::Parse, "'" + path + "': " + e.what());
      }
    }
    std::set<std::tuple<std::int64_t, std::vector<std::int64_t>, std::int64_t>> seen;
    for (const auto& r : existing) seen.insert({r.q, r.weights, r.alpha});
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    if (fmt == RecordFormat::Csv && !has_content) out << csv_header << '\n';
    std::size_t added = 0;
    for (const auto& r : fresh) {
      if (!seen.insert({r.q, r.weights, r.alpha}).second) continue;
      write_record(out, r, fmt);
      ++added;
    }
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
    std::ostringstream os;
    os << "appended " << added << " record(s) to " << path << " (" << (fresh.size() - added)
       << " already present)\n";
    return {exit_ok, os.str(), ""};
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

// ---------------------------------------------------------------------------
// matrix

inline CommandResult cmd_matrix(std::uint64_t q, const std::vector<std::int64_t>& weights, std::int64_t alpha,
                                bool json) {
  try {
    const WeightedSpace space(make_field(q), weights);
    const auto pts = enumerate_YQ(space);
    const auto g = generator_matrix(space, alpha, pts);
    std::ostringstream os;
    if (json)
      os << to_json(g).dump() << '\n';
    else
      write_matrix_text(os, g);
    return {exit_ok, os.str(), ""};
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

/// Rank, minimum distance and weight distribution of a matrix file (JSON or text; text needs q).
inline CommandResult cmd_matrix_check(const std::string& path, std::optional<std::uint64_t> q,
                                      const RunOptions& opts) {
  try {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    std::optional<GeneratorMatrix> m;
    if (first != std::string::npos && text[first] == '{') {
      try {
        m = matrix_from_json(nlohmann::json::parse(text));
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, "'" + path + "': " + e.what());
      }
    } else {
      if (!q) throw Error(ErrorKind::Parse, "text matrices need --q");
      std::istringstream is(text);
      m = read_matrix_text(is, make_field(*q));
    }
    std::ostringstream os;
    const auto k = rank(*m);
    os << "q " << m->field().q() << ", rows " << m->rows() << ", cols " << m->cols() << ", rank " << k << '\n';
    if (k == 0) {
      os << "empty code\n";
    } else {
      try {
        const auto dist = weight_distribution(*m, {opts.budget, opts.threads});
        std::size_t d = 1;
        while (d < dist.size() && dist[d] == 0) ++d;
        os << "min_distance " << d << '\n' << "weights";
        for (std::size_t w = 0; w < dist.size(); ++w)
          if (dist[w]) os << ' ' << w << ':' << dist[w];
        os << '\n';
      } catch (const BudgetExceededError& e) {
        os << "min_distance skipped: " << e.what() << '\n';
      }
    }
    return {exit_ok, os.str(), ""};
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

}  // namespace wpt::cli
