// Command-line front end: reference tables, conjecture scans, and the
// invariant verifier. Exit codes: 0 success, 1 verify found violations,
// 2 bad configuration or evaluation error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtail/bounds.hpp"
#include "qtail/errors.hpp"
#include "qtail/inverse.hpp"
#include "qtail/report.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (const char ch : text) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

// Accepts catalog ids, family names expanding to both sides, or "all".
std::vector<qtail::BoundId> parse_bound_selection(const std::string& text) {
  using qtail::BoundId;
  std::vector<BoundId> ids;
  const auto add = [&ids](BoundId id) {
    for (const BoundId seen : ids)
      if (seen == id) return;  // dedupe while keeping first-seen order
    ids.push_back(id);
  };
  for (const std::string& token : split_csv(text)) {
    if (token.empty()) continue;
    if (token == "all") {
      for (const auto& spec : qtail::bound_catalog()) add(spec.id);
    } else if (token == "gordon") {
      add(BoundId::gordon_lower);
      add(BoundId::gordon_upper);
    } else if (token == "bs") {
      add(BoundId::bs_lower);
      add(BoundId::bs_upper);
    } else if (token == "thm3") {
      add(BoundId::thm3_lower);
      add(BoundId::thm3_upper);
    } else if (token == "corollary") {
      add(BoundId::corollary_lower);
      add(BoundId::corollary_upper);
    } else {
      const auto id = qtail::bound_from_string(token);
      if (!id) throw qtail::config_error("unknown bound id '" + token + "'");
      add(*id);
    }
  }
  return ids;
}

qtail::OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return qtail::OutputFormat::csv;
  if (name == "json") return qtail::OutputFormat::json;
  throw qtail::config_error("unknown --format '" + name + "' (expected csv or json)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gaussian upper-tail reference values, the proven bound catalog, and "
      "certified inverse estimates"};
  app.require_subcommand(1);

  qtail::CommandConfig config;
  std::string bounds_text = "all";
  std::string table_format = "csv";
  std::string scan_format = "json";

  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds-table", "Reference tail values against selected bounds on an x grid");
  bounds_cmd->add_option("--x-min", config.x_min)->capture_default_str();
  bounds_cmd->add_option("--x-max", config.x_max)->capture_default_str();
  bounds_cmd->add_option("--step", config.x_step)->capture_default_str();
  bounds_cmd->add_option("--bounds", bounds_text,
                         "Comma list of bound ids, family names, or 'all'")
      ->capture_default_str();
  bounds_cmd->add_flag("--normalized", config.normalized,
                       "Divide every value column by the reference");
  bounds_cmd->add_option("--format", table_format)->capture_default_str();
  bounds_cmd->add_option("--out", config.out_path, "Output path (default stdout)");

  CLI::App* inverse_cmd = app.add_subcommand(
      "inverse-table",
      "Closed-form inverse estimates and certified brackets on an alpha grid");
  inverse_cmd->add_option("--alpha-min", config.alpha_min)->capture_default_str();
  inverse_cmd->add_option("--alpha-max", config.alpha_max)->capture_default_str();
  inverse_cmd->add_option("--points-per-decade", config.points_per_decade)
      ->capture_default_str();
  inverse_cmd->add_option("--format", table_format)->capture_default_str();
  inverse_cmd->add_option("--out", config.out_path, "Output path (default stdout)");

  CLI::App* scan_cmd = app.add_subcommand(
      "conjecture-scan",
      "Record where each closed-form estimate bounds the true inverse");
  scan_cmd->add_option("--alpha-min", config.alpha_min)->capture_default_str();
  scan_cmd->add_option("--alpha-max", config.alpha_max)->capture_default_str();
  scan_cmd->add_option("--points-per-decade", config.points_per_decade)
      ->capture_default_str();
  scan_cmd->add_option("--format", scan_format, "Only json is supported")
      ->capture_default_str();
  scan_cmd->add_option("--out", config.out_path, "Output path (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the full invariant suite; exit 1 on any violation");
  verify_cmd->add_option("--grid-points", config.grid_points)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(bounds_cmd)) {
      config.bounds = parse_bound_selection(bounds_text);
      config.format = parse_format(table_format);
      const qtail::CsvTable table = qtail::bounds_table(config);
      qtail::write_output(config, config.format == qtail::OutputFormat::csv
                                      ? qtail::render_csv(table)
                                      : qtail::render_json(table));
    } else if (app.got_subcommand(inverse_cmd)) {
      config.format = parse_format(table_format);
      const qtail::CsvTable table = qtail::inverse_table(config);
      qtail::write_output(config, config.format == qtail::OutputFormat::csv
                                      ? qtail::render_csv(table)
                                      : qtail::render_json(table));
    } else if (app.got_subcommand(scan_cmd)) {
      if (parse_format(scan_format) != qtail::OutputFormat::json)
        throw qtail::config_error(
            "conjecture-scan emits a structured report; only --format json is supported");
      const qtail::ConjectureReport report = qtail::conjecture_scan(
          config.alpha_min, config.alpha_max, config.points_per_decade);
      qtail::write_output(config, qtail::conjecture_json(report));
    } else if (app.got_subcommand(verify_cmd)) {
      const qtail::VerifyReport report = qtail::run_verify(config.grid_points);
      std::cout << qtail::format_verify(report);
      return report.all_passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
