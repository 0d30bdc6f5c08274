#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtail/bounds.hpp"
#include "qtail/inverse.hpp"

namespace qtail {

enum class OutputFormat { csv, json };

// Flag-level configuration shared by the table/scan/verify commands.
// Validation happens in the command functions before any computation.
struct CommandConfig {
  double x_min = 0.1;
  double x_max = 6.0;
  double x_step = 0.1;
  double alpha_min = 1e-10;
  double alpha_max = 1e-2;
  int points_per_decade = 10;
  std::vector<BoundId> bounds;  // must be non-empty for bounds_table
  bool normalized = false;      // divide every value column by the reference
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  // empty writes to stdout
  int grid_points = 2000;
};

// Numeric table: fixed-arity rows under a header. Cells are rendered with
// shortest round-trip formatting, so parse/re-evaluate is lossless.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string render_csv(const CsvTable& table);
std::string render_json(const CsvTable& table);

// Write to config.out_path, or stdout when the path is empty.
void write_output(const CommandConfig& config, const std::string& payload);

// x, reference, then per selected bound a value column and a validity flag
// column (1 inside the proven interval). normalized divides value columns by
// the reference.
CsvTable bounds_table(const CommandConfig& config);

// alpha, reference, est_low1, est_low2, est_upp, cert_lower, cert_upper on a
// log-spaced alpha grid.
CsvTable inverse_table(const CommandConfig& config);

// JSON serialization of a conjecture scan with stable key order.
std::string conjecture_json(const ConjectureReport& report);

struct VerifyCheck {
  std::string family;
  bool passed = true;
  std::size_t points_checked = 0;
  std::vector<std::string> failures;  // first few failing (x|alpha, detail)
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::string conjecture_note;  // informational; never affects pass/fail
  bool all_passed = true;
};

// Replaceable bound evaluator so tests can inject a corrupted formula.
using BoundLogEvaluator = std::function<double(BoundId, double)>;

// The full invariant suite on the standard grids: oracle agreement, the four
// proven sandwiches, tightness orderings, the integral identity, asymptotic
// convergence, and the certified inverse sandwich. Conjecture results ride
// along as a note only.
VerifyReport run_verify(int grid_points = 2000,
                        const BoundLogEvaluator& bound_log = {});

std::string format_verify(const VerifyReport& report);

}  // namespace qtail
