#pragma once

// Command-line front end: `ucrga <compute|compare|check> --input PATH ...`.
// Exit codes: 0 success, 1 I/O or parse failure, 2 strict RGA on a singular
// or non-square matrix, 3 a property check failed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucrga/ucrga.hpp"

namespace ucrga::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kSingular = 2, kPropertyFailure = 3 };

struct ComputeRequest {
  std::string input_path;
  std::string format;  // csv | json; empty means infer from the extension
  std::string method = "uc";
  std::string output_format = "table";
  double rank_tol = kDefaultRankTol;
  double balance_tol = 1e-15;
  std::size_t max_iter = 10000;
  std::uint64_t seed = 42;
  int digits = 4;

  RgaOptions rga_options() const { return RgaOptions{rank_tol, BalanceOptions{balance_tol, max_iter}}; }
};

inline DenseMatrix load_matrix(const ComputeRequest& req) {
  std::ifstream in(req.input_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file '" + req.input_path + "'");
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::string format = req.format;
  if (format.empty()) {
    format = std::filesystem::path(req.input_path).extension() == ".json" ? "json" : "csv";
  }
  return format == "json" ? parse_json(text) : parse_csv(std::string_view(text));
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline nlohmann::json checks_json(const PropertyReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : report.checks) {
    arr.push_back({{"name", c.name},
                   {"value", c.value},
                   {"threshold", c.threshold},
                   {"passed", c.passed},
                   {"informational", c.informational}});
  }
  return arr;
}

inline nlohmann::json report_json(const RgaResult& r, const PropertyReport& checks) {
  return nlohmann::json{{"method", std::string(to_string(r.method))},
                        {"shape", {r.rga.rows(), r.rga.cols()}},
                        {"rank", r.numerical_rank},
                        {"rga", to_json(r.rga)},
                        {"row_sums", r.row_sums},
                        {"col_sums", r.col_sums},
                        {"element_sum", r.element_sum},
                        {"balancer_converged", r.balancer_converged},
                        {"checks", checks_json(checks)}};
}

inline void print_vector(std::ostream& out, const std::vector<double>& v, int digits) {
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << std::setw(digits + 6) << v[k];
  out << '\n';
}

inline void print_matrix(std::ostream& out, const DenseMatrix& a, int digits) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << std::setw(digits + 6) << a(i, j);
    out << '\n';
  }
}

inline void print_checks(std::ostream& out, const PropertyReport& report) {
  for (const auto& c : report.checks) {
    const char* tag = c.passed ? "PASS" : (c.informational ? "INFO" : "FAIL");
    out << "  [" << tag << "] " << std::left << std::setw(26) << c.name << std::right
        << std::scientific << std::setprecision(3) << " value=" << c.value << " threshold=" << c.threshold
        << std::defaultfloat << '\n';
  }
}

inline void print_table(std::ostream& out, const RgaResult& r, const PropertyReport& checks, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits);
  os << "method: " << to_string(r.method) << '\n'
     << "shape: " << r.rga.rows() << 'x' << r.rga.cols() << '\n'
     << "rank: " << r.numerical_rank << '\n'
     << "balancer_converged: " << (r.balancer_converged ? "true" : "false") << '\n'
     << "rga:\n";
  print_matrix(os, r.rga, digits);
  os << "row_sums:   ";
  print_vector(os, r.row_sums, digits);
  os << "col_sums:   ";
  print_vector(os, r.col_sums, digits);
  os << "element_sum: " << r.element_sum << '\n';
  if (!checks.checks.empty()) {
    os << "checks:\n";
    print_checks(os, checks);
  }
  out << os.str();
}

inline void render(std::ostream& out, const ComputeRequest& req, const std::vector<RgaResult>& results,
                   const std::vector<PropertyReport>& reports) {
  if (req.output_format == "json") {
    if (results.size() == 1) {
      out << report_json(results[0], reports[0]).dump(2) << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t k = 0; k < results.size(); ++k) arr.push_back(report_json(results[k], reports[k]));
      out << arr.dump(2) << '\n';
    }
  } else if (req.output_format == "csv") {
    for (const auto& r : results) {
      if (results.size() > 1) out << "# " << to_string(r.method) << '\n';
      write_csv(out, r.rga);
    }
  } else {
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (k) out << '\n';
      print_table(out, results[k], reports[k], req.digits);
    }
  }
}

inline void warn_unconverged(std::ostream& err, const RgaResult& r) {
  if (!r.balancer_converged) {
    err << "warning: scale balancing did not reach its tolerance; " << to_string(r.method)
        << " result may be inaccurate (raise --max-iter or --balance-tol)\n";
  }
}

inline std::vector<RgaMethod> requested_methods(const ComputeRequest& req) {
  if (req.method == "all") return {RgaMethod::strict, RgaMethod::mp, RgaMethod::uc};
  return {*parse_method(req.method)};
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

// With --method all, strict is skipped (with a note) when it does not apply.
inline int cmd_compute(const ComputeRequest& req, std::ostream& out, std::ostream& err) {
  const DenseMatrix g = load_matrix(req);
  const RgaOptions opts = req.rga_options();
  const auto methods = requested_methods(req);
  std::vector<RgaResult> results;
  std::vector<PropertyReport> reports;
  for (RgaMethod m : methods) {
    try {
      results.push_back(compute_rga(g, m, opts));
    } catch (const ShapeError& e) {
      if (methods.size() == 1) throw;
      err << "note: strict RGA skipped: " << e.what() << '\n';
      continue;
    } catch (const SingularMatrixError& e) {
      if (methods.size() == 1) throw;
      err << "note: strict RGA skipped: " << e.what() << '\n';
      continue;
    }
    warn_unconverged(err, results.back());
    reports.push_back(rga_summary(results.back()));
  }
  render(out, req, results, reports);
  return kOk;
}

inline int cmd_compare(const ComputeRequest& req, std::ostream& out, std::ostream& err) {
  const DenseMatrix g = load_matrix(req);
  const RgaOptions opts = req.rga_options();
  const RgaResult mp = rga_mp(g, opts);
  const RgaResult uc = rga_uc(g, opts);
  warn_unconverged(err, uc);
  const double diff = max_abs_diff(mp.rga, uc.rga);

  random::Engine rng(req.seed);
  const SuiteOptions suite;
  const DiagScaling d = random::log_uniform_scaling(rng, g.rows(), 1.0 / suite.scale_span, suite.scale_span);
  const DiagScaling e = random::log_uniform_scaling(rng, g.cols(), 1.0 / suite.scale_span, suite.scale_span);
  const double mp_res = scaling_invariance_residual(g, d, e, RgaMethod::mp, opts);
  const double uc_res = scaling_invariance_residual(g, d, e, RgaMethod::uc, opts);

  if (req.output_format == "json") {
    nlohmann::json j{{"mp", report_json(mp, rga_summary(mp))},
                     {"uc", report_json(uc, rga_summary(uc))},
                     {"max_abs_difference", diff},
                     {"scaling_residual", {{"mp", mp_res}, {"uc", uc_res}}},
                     {"seed", req.seed}};
    out << j.dump(2) << '\n';
  } else if (req.output_format == "csv") {
    render(out, req, {mp, uc}, {});
  } else {
    render(out, req, {mp, uc}, {rga_summary(mp), rga_summary(uc)});
    std::ostringstream os;
    os << std::scientific << std::setprecision(3);
    os << "\nmax_abs_difference(mp, uc): " << diff << '\n'
       << "scaling_invariance_residual (seed " << req.seed << "):\n"
       << "  mp: " << mp_res << '\n'
       << "  uc: " << uc_res << '\n';
    out << os.str();
  }
  return kOk;
}

inline int cmd_check(const ComputeRequest& req, std::ostream& out, std::ostream& err) {
  const DenseMatrix g = load_matrix(req);
  SuiteOptions suite;
  suite.rga = req.rga_options();
  suite.seed = req.seed;
  const auto methods = requested_methods(req);
  std::vector<RgaResult> results;
  std::vector<PropertyReport> reports;
  bool ok = true;
  for (RgaMethod m : methods) {
    try {
      results.push_back(compute_rga(g, m, suite.rga));
    } catch (const ShapeError& e) {
      if (methods.size() == 1) throw;
      err << "note: strict RGA skipped: " << e.what() << '\n';
      continue;
    } catch (const SingularMatrixError& e) {
      if (methods.size() == 1) throw;
      err << "note: strict RGA skipped: " << e.what() << '\n';
      continue;
    }
    warn_unconverged(err, results.back());
    reports.push_back(run_property_suite(g, m, suite));
    ok = ok && reports.back().all_passed();
  }
  render(out, req, results, reports);
  return ok ? kOk : kPropertyFailure;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

inline void add_common_options(CLI::App& sub, ComputeRequest& req) {
  sub.add_option("--input", req.input_path, "Matrix file (CSV or JSON)")->required();
  sub.add_option("--format", req.format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--method", req.method, "RGA variant")
      ->check(CLI::IsMember({"strict", "mp", "uc", "all"}))
      ->capture_default_str();
  sub.add_option("--output", req.output_format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  sub.add_option("--rank-tol", req.rank_tol, "Relative singular-value cutoff")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--balance-tol", req.balance_tol, "Scale balancing tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--max-iter", req.max_iter, "Scale balancing iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--seed", req.seed, "Seed for randomized checks")->capture_default_str();
  sub.add_option("--digits", req.digits, "Decimals in table output")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative gain array for square, singular and rectangular matrices", "ucrga"};
  app.require_subcommand(1);
  ComputeRequest req;
  CLI::App* compute = app.add_subcommand("compute", "Compute an RGA and its sums");
  CLI::App* compare = app.add_subcommand("compare", "Compare MP- and UC-based RGAs");
  CLI::App* check = app.add_subcommand("check", "Run the property suite");
  for (CLI::App* sub : {compute, compare, check}) add_common_options(*sub, req);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoError;
  }

  try {
    if (compute->parsed()) return cmd_compute(req, out, err);
    if (compare->parsed()) return cmd_compare(req, out, err);
    return cmd_check(req, out, err);
  } catch (const SingularMatrixError& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace ucrga::cli
