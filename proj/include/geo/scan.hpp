#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "geo/lie_algebra.hpp"
#include "geo/rational.hpp"

namespace geo {

/// Raised on malformed or inconsistent scan requests (user error, exit 2).
struct ScanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One axis of the grid: param swept from lo to hi inclusive in `steps`
/// equal increments (steps + 1 points, all exact rationals).
struct GridAxis {
  std::string param;
  Rational lo, hi;
  long steps = 0;
};

/// Parses "param=lo..hi/steps" with rational bounds and steps >= 1.
GridAxis parse_grid_spec(const std::string& spec);

/// Parses "param=value" with a rational value.
std::pair<std::string, Rational> parse_fix_spec(const std::string& spec);

struct ScanRequest {
  std::optional<FamilyName> family;  // nullopt: sweep schema coefficients
  std::map<std::string, Rational> fixed;
  std::vector<GridAxis> grids;
  std::string predicate;
  bool float_mode = false;  // binary64 pipeline with GEO_FLOAT_TOL comparisons
};

/// Known predicate names, e.g. "cosymplectic-J1", "both-integrable".
const std::vector<std::string>& scan_predicates();

/// Runs the scan and writes the CSV (comment header + one row per grid
/// point, rows in deterministic grid order; points are evaluated in
/// parallel).  Throws ScanError on unknown parameters/predicates, empty
/// grids, or inadmissible fixed values.
void run_scan(const ScanRequest& req, std::ostream& out);

}  // namespace geo
