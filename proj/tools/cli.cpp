#include "cli.hpp"

#include <symsens/core.hpp>
#include <symsens/counting.hpp>
#include <symsens/distribution.hpp>
#include <symsens/errors.hpp>
#include <symsens/io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace symsens::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { table, csv, json };

struct Settings {
  Format format = Format::table;
  bool verify = false;
  bool verbose = false;
  std::optional<unsigned> cap;
  bool cost_acknowledged = false;
  std::string out_path;
};

struct UsageError : Error {
  using Error::Error;
};

/// Fixed-width text table; every column is as wide as its widest cell.
std::string render_columns(std::vector<std::vector<std::string>> const& rows) {
  std::vector<std::size_t> widths;
  for (auto const& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (auto const& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size())
        out << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(std::vector<unsigned> const& values, char const* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

unsigned effective_cap(Settings const& settings, unsigned fallback) {
  if (!settings.cap)
    return fallback;
  if (!settings.cost_acknowledged)
    throw UsageError("--cap requires --i-know-the-cost");
  return *settings.cap;
}

/// x_1 .. x_n of an input index, x_1 first.
std::string input_vector(InputIndex x, unsigned n) {
  std::string bits(n, '0');
  for (unsigned i = 0; i < n; ++i)
    if ((x >> i) & 1u)
      bits[i] = '1';
  return bits;
}

int analyze_compact(CompactTruthTable const& c, Settings const& settings, std::ostream& out) {
  auto const comp = to_composition(c);
  auto const profile = sensitivity_profile(c);
  bool const maximal = has_max_sensitivity(c);
  bool const trivial = is_trivial(c);
  switch (settings.format) {
  case Format::table:
    out << render_columns({
        {"n", std::to_string(c.num_vars())},
        {"compact_truth_table", c.to_string()},
        {"composition", comp.to_string()},
        {"per_weight", join(profile.per_weight, " ")},
        {"sensitivity", std::to_string(profile.max)},
        {"max_sensitivity", yes_no(maximal)},
        {"trivial", yes_no(trivial)},
    });
    break;
  case Format::csv:
    out << "n,compact_truth_table,composition,per_weight,sensitivity,max_sensitivity,trivial\n"
        << c.num_vars() << ',' << c.to_string() << ',' << comp.to_string() << ','
        << join(profile.per_weight, ";") << ',' << profile.max << ','
        << (maximal ? "true" : "false") << ',' << (trivial ? "true" : "false") << '\n';
    break;
  case Format::json: {
    ordered_json j;
    j["n"] = c.num_vars();
    j["compact_truth_table"] = c.to_string();
    j["composition"] = comp.to_string();
    j["per_weight"] = profile.per_weight;
    j["sensitivity"] = profile.max;
    j["max_sensitivity"] = maximal;
    j["trivial"] = trivial;
    out << j.dump() << '\n';
    break;
  }
  }
  return kSuccess;
}

int report_asymmetry(TruthTable const& t, AsymmetryWitness const& w, Settings const& settings,
                     std::ostream& out, std::ostream& err) {
  unsigned const n = t.num_vars();
  auto const weight = std::popcount(w.first);
  err << "not symmetric: inputs " << input_vector(w.first, n) << " and "
      << input_vector(w.second, n) << " both have weight " << weight << " but f = " << t.get(w.first)
      << " and " << t.get(w.second) << '\n';
  switch (settings.format) {
  case Format::table:
    out << render_columns({
        {"n", std::to_string(n)},
        {"symmetric", "no"},
        {"witness", input_vector(w.first, n) + " " + input_vector(w.second, n)},
    });
    break;
  case Format::csv:
    out << "n,symmetric,witness_first,witness_second\n"
        << n << ",false," << input_vector(w.first, n) << ',' << input_vector(w.second, n) << '\n';
    break;
  case Format::json: {
    ordered_json j;
    j["n"] = n;
    j["symmetric"] = false;
    j["witness"] = {input_vector(w.first, n), input_vector(w.second, n)};
    out << j.dump() << '\n';
    break;
  }
  }
  return kVerificationFailure;
}

int cmd_analyze(std::string const& input, Settings const& settings, std::ostream& out,
                std::ostream& err) {
  bool const is_bit_string =
      !input.empty() && std::all_of(input.begin(), input.end(), [](char ch) { return ch == '0' || ch == '1'; });
  if (is_bit_string) {
    if (input.size() < 2)
      throw UsageError("compact table needs at least two bits (n >= 1)");
    return analyze_compact(CompactTruthTable::parse(input), settings, out);
  }
  auto const table = io::read_truth_table_file(input, effective_cap(settings, kDefaultFullTableCap));
  auto const result = compress(table);
  if (auto const* w = std::get_if<AsymmetryWitness>(&result))
    return report_asymmetry(table, *w, settings, out, err);
  return analyze_compact(std::get<CompactTruthTable>(result), settings, out);
}

std::vector<std::vector<std::string>> row_cells(std::vector<TableRow> const& rows) {
  std::vector<std::vector<std::string>> cells{{"compact_truth_table", "composition", "sensitivity"}};
  for (auto const& r : rows)
    cells.push_back({r.table.to_string(), r.composition.to_string(), std::to_string(r.sensitivity)});
  return cells;
}

void write_rows(std::vector<TableRow> const& rows, Format format, std::ostream& out) {
  switch (format) {
  case Format::table:
    out << render_columns(row_cells(rows));
    break;
  case Format::csv:
    for (auto const& cells : row_cells(rows))
      out << cells[0] << ',' << cells[1] << ',' << cells[2] << '\n';
    break;
  case Format::json: {
    auto j = ordered_json::array();
    for (auto const& r : rows)
      j.push_back({{"compact_truth_table", r.table.to_string()},
                   {"composition", r.composition.to_string()},
                   {"sensitivity", r.sensitivity}});
    out << j.dump() << '\n';
    break;
  }
  }
}

int cmd_table(unsigned n, Settings const& settings, std::ostream& out) {
  if (n > kListingCap)
    throw SizeError("table lists 2^(n+1) rows and is limited to n <= " + std::to_string(kListingCap) +
                    "; use `census " + std::to_string(n) + "` for the sensitivity histogram");
  write_rows(table_rows(n), settings.format, out);
  return kSuccess;
}

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Check> run_verifications(SensitivityHistogram const& h, CensusOptions const& options) {
  unsigned const n = h.n;
  std::vector<Check> checks;
  auto const criterion = verify_max_sensitivity_criterion(n, options);
  checks.push_back({"criterion", criterion.holds,
                    criterion.holds ? std::to_string(n) + "-sensitive functions: " + criterion.max_sensitivity_count.str()
                                  : "counterexample " + criterion.counterexample->to_string()});
  auto const turan = verify_turan(n, options);
  checks.push_back({"turan", turan.holds,
                    "min non-trivial sensitivity " + std::to_string(turan.min_nontrivial) + " vs bound " +
                        std::to_string(turan.bound) + ", witness " + turan.witness->to_string()});
  auto const expected = max_sensitivity_count(n);
  bool const counts_agree = h.count(n) == expected && criterion.max_sensitivity_count == expected;
  checks.push_back({"count", counts_agree,
                    "census " + h.count(n).str() + " vs 2^(n+1) - N_n = " + expected.str()});
  return checks;
}

int cmd_census(unsigned n, Settings const& settings, std::ostream& out, std::ostream& err) {
  CensusOptions options;
  options.cap = effective_cap(settings, kDefaultCensusCap);
  if (settings.verbose && n > kListingCap)
    throw SizeError("--verbose lists every table and is limited to n <= " + std::to_string(kListingCap));
  auto const h = census(n, options);

  std::vector<Check> checks;
  if (settings.verify)
    checks = run_verifications(h, options);
  bool const all_passed = std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });

  switch (settings.format) {
  case Format::table: {
    if (settings.verbose) {
      write_rows(table_rows(n), Format::table, out);
      out << '\n';
    }
    std::vector<std::vector<std::string>> cells{{"s", "count"}};
    for (unsigned s = 0; s <= n; ++s)
      cells.push_back({std::to_string(s), h.count(s).str()});
    out << "n=" << n << " total=" << h.total.str() << '\n' << render_columns(cells);
    for (auto const& c : checks)
      out << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
    break;
  }
  case Format::csv:
    if (settings.verbose) {
      write_rows(table_rows(n), Format::csv, out);
      out << '\n';
    }
    out << io::histogram_to_csv(h);
    for (auto const& c : checks)
      err << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
    break;
  case Format::json: {
    auto j = ordered_json::parse(io::histogram_to_json(h));
    if (settings.verbose) {
      auto rows = ordered_json::array();
      for (auto const& r : table_rows(n))
        rows.push_back({{"compact_truth_table", r.table.to_string()},
                        {"composition", r.composition.to_string()},
                        {"sensitivity", r.sensitivity}});
      j["rows"] = std::move(rows);
    }
    if (!checks.empty()) {
      ordered_json v;
      for (auto const& c : checks)
        v[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
      j["verification"] = std::move(v);
    }
    out << j.dump() << '\n';
    break;
  }
  }
  return all_passed ? kSuccess : kVerificationFailure;
}

int cmd_count(unsigned max_n, Settings const& settings, std::ostream& out) {
  if (max_n == 0)
    throw UsageError("count needs max_n >= 1");
  auto const series = count_series(max_n);
  switch (settings.format) {
  case Format::table: {
    std::vector<std::vector<std::string>> cells{{"n", "total", "no_ones", "max_sens", "ratio", "decimal"}};
    for (unsigned n = 1; n <= max_n; ++n) {
      auto const r = series.ratio(n);
      cells.push_back({std::to_string(n), series.total[n - 1].str(), series.no_ones[n - 1].str(),
                       series.max_sens[n - 1].str(), to_fraction_string(r), to_decimal_string(r, 12)});
    }
    out << render_columns(cells);
    break;
  }
  case Format::csv:
    out << io::count_series_to_csv(series);
    break;
  case Format::json:
    out << io::count_series_to_json(series) << '\n';
    break;
  }
  return kSuccess;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sensitivity analysis of symmetric Boolean functions", "symsens"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  std::map<std::string, Format> const formats{
      {"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", settings.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--verify", settings.verify, "Also check the s = n criterion, the Turan bound and the exact count");
  app.add_option("--cap", settings.cap, "Override the enumeration / full-table cap");
  app.add_flag("--i-know-the-cost", settings.cost_acknowledged, "Acknowledge the cost of --cap");
  app.add_option("--out", settings.out_path, "Write output to this file instead of stdout");
  std::optional<unsigned> max_n_flag;
  app.add_option("--max-n", max_n_flag, "Largest n for the count subcommand");

  std::string analyze_input;
  auto* analyze = app.add_subcommand("analyze", "Analyze one function (compact bit string or truth-table file)");
  analyze->add_option("input", analyze_input, "Compact table such as 1110, or a truth-table file path")->required();

  unsigned table_n = 0;
  auto* table = app.add_subcommand("table", "List every symmetric function of n variables");
  table->add_option("n", table_n, "Number of variables")->required()->check(CLI::PositiveNumber);

  unsigned census_n = 0;
  auto* census_cmd = app.add_subcommand("census", "Histogram of sensitivities over all symmetric functions");
  census_cmd->add_option("n", census_n, "Number of variables")->required()->check(CLI::PositiveNumber);
  census_cmd->add_flag("--verbose", settings.verbose, "Also list every table (n <= 6)");

  std::optional<unsigned> count_n;
  auto* count = app.add_subcommand("count", "Exact counts T_n, N_n, a_n for n = 1..max_n");
  count->add_option("max_n", count_n, "Largest n");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!settings.out_path.empty()) {
    file.open(settings.out_path);
    if (!file) {
      err << "error: cannot open output file " << settings.out_path << '\n';
      return kUsageError;
    }
    sink = &file;
  }

  try {
    if (*analyze)
      return cmd_analyze(analyze_input, settings, *sink, err);
    if (*table)
      return cmd_table(table_n, settings, *sink);
    if (*census_cmd)
      return cmd_census(census_n, settings, *sink, err);
    if (!count_n && !max_n_flag)
      throw UsageError("count needs max_n (positional or --max-n)");
    return cmd_count(count_n ? *count_n : *max_n_flag, settings, *sink);
  } catch (SizeError const& e) {
    err << "size error: " << e.what() << '\n';
    return kSizeError;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

} // namespace symsens::cli
