#include "hpm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hpm/error.hpp"
#include "hpm/hankel.hpp"
#include "hpm/pade.hpp"
#include "hpm/report.hpp"
#include "hpm/series.hpp"

namespace hpm::cli {

namespace {

using report::Json;

constexpr int kMinDigits = 15;
constexpr int kDefaultDigits = 50;

/// Bad flag value; reported with exit code 2.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct Options {
  std::vector<int> ds;
  int dmax = 0;
  int nmax = 0;
  int M = 0;
  int N = 0;
  bool symbolic = false;
  bool any_n = false;
  bool timing = false;
  int fit_min = 5;
  int significant = 0;
  std::string precision = "auto";
  std::string slope = kReferenceTwoF2;
  std::string format = "json";
  std::string output;
  std::vector<std::string> xs;
};

int parse_digits(const std::string& text) {
  int digits = 0;
  std::istringstream in(text);
  if (!(in >> digits) || !in.eof()) throw UsageError("--precision", "expected a digit count or 'auto', got '" + text + "'");
  if (digits < kMinDigits) throw UsageError("--precision", "at least " + std::to_string(kMinDigits) + " digits required");
  return digits;
}

PrecisionPolicy policy_from(const std::string& text) {
  return text == "auto" ? PrecisionPolicy::automatic() : PrecisionPolicy::fixed(parse_digits(text));
}

Precision fixed_precision(const std::string& text) {
  if (text == "auto") return Precision(kDefaultDigits);
  return Precision(parse_digits(text));
}

BigFloat parse_decimal(const std::string& flag, const std::string& text, Precision p) {
  try {
    return BigFloat::parse(text, p);
  } catch (const Error&) {
    throw UsageError(flag, "not a decimal number: '" + text + "'");
  }
}

void check_sequence_flags(const Options& o) {
  if (o.ds.empty()) throw UsageError("--d", "at least one value required");
  for (int d : o.ds) {
    if (d < 3) throw UsageError("--d", "values must be >= 3, got " + std::to_string(d));
  }
  if (o.dmax < 3) throw UsageError("--dmax", "must be >= 3");
}

void check_degrees(const Options& o) {
  if (o.M < 0) throw UsageError("--m", "must be >= 0");
  if (o.N < 0) throw UsageError("--n", "must be >= 0");
}

Json inputs_json(const std::string& sub, const Options& o) {
  Json in;
  if (sub == "coeffs") {
    in["nmax"] = o.nmax;
    in["symbolic"] = o.symbolic;
    if (!o.symbolic) {
      in["slope"] = o.slope;
      in["precision"] = o.precision;
    }
  } else if (sub == "slope" || sub == "converge") {
    in["d"] = o.ds;
    in["dmax"] = o.dmax;
    in["precision"] = o.precision;
    if (sub == "converge") in["fit_min"] = o.fit_min;
  } else {
    in["m"] = o.M;
    in["n"] = o.N;
    in["slope"] = o.slope;
    in["precision"] = o.precision;
    if (sub == "table") {
      in["x"] = o.xs;
      in["digits"] = o.significant;
      in["any_n"] = o.any_n;
    }
  }
  return in;
}

PadeApproximant build_pade(const Options& o) {
  const Precision p = fixed_precision(o.precision);
  const BigFloat s = parse_decimal("--slope", o.slope, p) / 2;
  const auto series = numeric_coeffs(std::max(3, o.M + o.N), s, p);
  return pade_construct(series, o.M, o.N);
}

/// Produces the report body; CSV output is returned through `csv`.
Json compute(const std::string& sub, const Options& o, std::optional<std::string>& csv) {
  Json results;
  if (sub == "coeffs") {
    if (o.nmax < 3) throw UsageError("--nmax", "must be >= 3");
    if (o.symbolic) return report::symbolic_series_json(symbolic_coeffs(o.nmax));
    const Precision p = fixed_precision(o.precision);
    const BigFloat s = parse_decimal("--slope", o.slope, p) / 2;
    return report::numeric_series_json(numeric_coeffs(o.nmax, s, p));
  }
  if (sub == "slope" || sub == "converge") {
    check_sequence_flags(o);
    const auto policy = policy_from(o.precision);
    const auto seqs = root_sequences(o.ds, o.dmax, policy);
    Json per_d = Json::array();
    for (const auto& seq : seqs) {
      per_d.push_back(sub == "slope" ? report::slope_json(seq) : report::sequence_json(seq, o.fit_min, o.dmax));
    }
    if (sub == "converge" && o.format == "csv") csv = report::figure_csv(seqs);
    results["two_f2"] = seqs.front().last().two_f2().to_string();
    results["sequences"] = std::move(per_d);
    return results;
  }
  check_degrees(o);
  if (sub == "table" && !o.any_n && o.N != o.M + 3) {
    throw UsageError("--n", "table requires N = M + 3 (pass --any-n to override)");
  }
  const auto P = build_pade(o);
  if (sub == "pade") return report::pade_json(P);

  std::vector<BigFloat> xs;
  for (const auto& x : o.xs) {
    BigFloat v = parse_decimal("--x", x, P.precision);
    if (v.sign() < 0) throw UsageError("--x", "abscissae must be non-negative, got '" + x + "'");
    xs.push_back(std::move(v));
  }
  const auto rows = tf_table(P, xs);
  if (o.format == "csv") csv = report::table_csv(rows, o.significant);
  results["two_f2"] = (P.slope_s * 2).to_string();
  results["rows"] = report::table_json(rows, o.significant);
  return results;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--output", o.output, "Write the report to this file instead of stdout");
  cmd->add_flag("--timing", o.timing, "Add wall-clock timing to the JSON report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hankel-Pade solver for the Thomas-Fermi equation", "hpm"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients of f(t) = u(t^2)^(1/2)");
  coeffs->add_option("--nmax", o.nmax, "Highest order")->required();
  coeffs->add_flag("--symbolic", o.symbolic, "Exact polynomials in s = f2");
  coeffs->add_option("--slope", o.slope, "u'(0) for numeric coefficients");
  coeffs->add_option("--precision", o.precision, "Decimal digits");

  auto* slope = app.add_subcommand("slope", "Limit of the Hankel root sequence");
  auto* converge = app.add_subcommand("converge", "Full root sequences with step sizes and fit");
  for (auto* cmd : {slope, converge}) {
    cmd->add_option("--d", o.ds, "Hankel offsets")->required()->delimiter(',');
    cmd->add_option("--dmax", o.dmax, "Largest determinant dimension")->required();
    cmd->add_option("--precision", o.precision, "Decimal digits or 'auto'");
  }
  add_format(converge, o);
  converge->add_option("--fit-min", o.fit_min, "Smallest D used in the convergence fit");

  auto* pade = app.add_subcommand("pade", "Pade approximant coefficients");
  auto* table = app.add_subcommand("table", "u(x) and -u'(x) from a Pade approximant");
  for (auto* cmd : {pade, table}) {
    cmd->add_option("--m", o.M, "Numerator degree")->required();
    cmd->add_option("--n", o.N, "Denominator degree")->required();
    cmd->add_option("--slope", o.slope, "u'(0)");
    cmd->add_option("--precision", o.precision, "Decimal digits");
  }
  table->add_option("--x", o.xs, "Abscissae")->required()->delimiter(',');
  table->add_option("--digits", o.significant, "Significant digits shown (0 = all)")->check(CLI::NonNegativeNumber);
  table->add_flag("--any-n", o.any_n, "Allow N != M + 3");
  add_format(table, o);

  for (auto* cmd : {coeffs, slope, converge, pade, table}) add_common(cmd, o);

  std::vector<std::string> argv{"hpm"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  const auto started = std::chrono::steady_clock::now();
  Json body;
  std::optional<std::string> csv;
  try {
    body = compute(sub, o, csv);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitComputation;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

  std::string text;
  if (csv) {
    text = *csv;
  } else {
    Json doc;
    doc["schema_version"] = report::kSchemaVersion;
    doc["subcommand"] = sub;
    doc["inputs"] = inputs_json(sub, o);
    doc["results"] = std::move(body);
    doc["timing"] = o.timing ? Json{{"wall_seconds", elapsed.count()}} : Json(nullptr);
    text = doc.dump(2) + "\n";
  }

  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!(file << text)) {
      err << "error: --output: cannot write '" << o.output << "'\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

}  // namespace hpm::cli
