// wptcodes: command-line front end for the generalized toric code library.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wptcodes/commands.hpp"

namespace {

std::vector<std::uint64_t> parse_q_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  for (auto v : wpt::parse_int_list(s)) {
    if (v < 0) throw wpt::Error(wpt::ErrorKind::NotPrime, "q must be prime, got " + std::to_string(v));
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  const auto parsed = wpt::parse_int_list(v);
  if (parsed.size() != 1 || parsed[0] < 0)
    throw wpt::Error(wpt::ErrorKind::Parse, std::string(name) + " must be a nonnegative integer");
  return static_cast<std::uint64_t>(parsed[0]);
}

int emit(const wpt::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized toric codes on degenerate weighted projective tori"};
  app.require_subcommand(1);

  std::string q_arg, table_format, scan_format, matrix_format, out_path, in_path, a_arg;
  std::vector<std::string> weight_args;
  std::int64_t alpha = 0, alpha_max = 0, alpha_offset = 3, max_defect = 0;
  std::optional<std::uint64_t> budget_flag, threads_flag;
  bool verify = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", budget_flag, "maximum projective messages per exhaustive search");
    sub->add_option("--threads", threads_flag, "worker threads (0 = all cores)");
  };

  auto* params = app.add_subcommand("params", "parameters [N,K,delta] of one code");
  params->add_option("--q", q_arg, "prime field size")->required();
  params->add_option("--weights", weight_args, "weights w0,w1,...")->required()->expected(1);
  params->add_option("--alpha", alpha, "degree")->required();
  params->add_flag("--verify", verify, "cross-check against matrix rank and exhaustive search");
  add_common(params);

  auto* table = app.add_subcommand("table", "parameter table for P(1,1,a)");
  table->add_option("--q", q_arg, "prime field size")->required();
  table->add_option("--a", a_arg, "last weight a")->required();
  table->add_option("--alpha-max", alpha_max, "largest degree")->required();
  table->add_option("--format", table_format, "md, csv or json")->default_val("md");
  table->add_flag("--verify", verify, "cross-check every row");
  add_common(table);

  auto* verify_cmd = app.add_subcommand("verify", "cross-verification sweep, JSON report");
  verify_cmd->add_option("--q", q_arg, "comma-separated primes")->required();
  verify_cmd->add_option("--weights", weight_args, "weight set (repeatable)")->required();
  verify_cmd->add_option("--alpha-offset", alpha_offset, "sweep alpha up to a_Y + offset")->default_val(3);
  add_common(verify_cmd);

  auto* scan = app.add_subcommand("scan", "append low-defect P(1,1,a) codes to a record file");
  scan->add_option("--q", q_arg, "comma-separated primes")->required();
  scan->add_option("--a", a_arg, "comma-separated values of a")->required();
  scan->add_option("--out", out_path, "CSV or JSON-lines file")->required();
  scan->add_option("--max-defect", max_defect, "keep codes with N+1-K-delta at most this")->default_val(0);
  scan->add_option("--format", scan_format, "csv or json (default: by extension)");

  auto* matrix = app.add_subcommand("matrix", "dump a generator matrix, or check one with --in");
  matrix->add_option("--q", q_arg, "prime field size");
  matrix->add_option("--weights", weight_args, "weights w0,w1,...")->expected(1);
  matrix->add_option("--alpha", alpha, "degree");
  matrix->add_option("--format", matrix_format, "text or json")->default_val("text");
  matrix->add_option("--in", in_path, "matrix file to analyse instead");
  add_common(matrix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : wpt::cli::exit_usage;
  }

  try {
    wpt::cli::RunOptions opts;
    if (auto v = env_u64("WPT_BUDGET")) opts.budget = *v;
    if (auto v = env_u64("WPT_THREADS")) opts.threads = static_cast<unsigned>(*v);
    if (budget_flag) opts.budget = *budget_flag;
    if (threads_flag) opts.threads = static_cast<unsigned>(*threads_flag);

    const auto qs = parse_q_list(q_arg);
    auto single_q = [&]() {
      if (qs.size() != 1) throw wpt::Error(wpt::ErrorKind::Parse, "expected a single --q");
      return qs[0];
    };

    if (*params) {
      return emit(wpt::cli::cmd_params(single_q(), wpt::cli::parse_weights_arg(weight_args.at(0)), alpha, verify,
                                       opts));
    }
    if (*table) {
      const auto as = wpt::parse_int_list(a_arg);
      if (as.size() != 1) throw wpt::Error(wpt::ErrorKind::Parse, "expected a single --a");
      return emit(wpt::cli::cmd_table(single_q(), as[0], alpha_max, wpt::cli::parse_table_format(table_format), verify,
                                      opts));
    }
    if (*verify_cmd) {
      wpt::cli::VerifyRequest req;
      req.qs = qs;
      for (const auto& w : weight_args) req.weight_sets.push_back(wpt::cli::parse_weights_arg(w));
      req.alpha_offset = alpha_offset;
      return emit(wpt::cli::cmd_verify(req, opts));
    }
    if (*scan) {
      return emit(wpt::cli::cmd_scan(qs, wpt::parse_int_list(a_arg), out_path, max_defect, scan_format));
    }
    if (*matrix) {
      if (!in_path.empty()) {
        std::optional<std::uint64_t> q;
        if (!qs.empty()) q = single_q();
        return emit(wpt::cli::cmd_matrix_check(in_path, q, opts));
      }
      if (weight_args.empty()) throw wpt::Error(wpt::ErrorKind::Parse, "matrix needs --weights or --in");
      if (matrix_format != "text" && matrix_format != "json")
        throw wpt::Error(wpt::ErrorKind::Parse, "matrix format must be text or json");
      return emit(wpt::cli::cmd_matrix(single_q(), wpt::cli::parse_weights_arg(weight_args.at(0)), alpha,
                                       matrix_format == "json"));
    }
  } catch (const wpt::Error& e) {
    std::cerr << e.what() << '\n';
    return wpt::cli::exit_usage;
  }
  return wpt::cli::exit_usage;
}
