#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qstirl/identities.hpp"

namespace qstirl {

using ParamMap = std::map<std::string, long, std::less<>>;

/// Inclusive range for one named parameter.
struct ParamRange {
  std::string name;
  long lo = 0;
  long hi = -1;
};

/// Cartesian product of parameter ranges, enumerated lexicographically in
/// the identity's parameter order, optionally cut down by a predicate.
/// Inadmissible points are skipped.
struct Grid {
  std::vector<ParamRange> ranges;
  std::function<bool(const ParamMap&)> where;

  Grid() = default;
  Grid(std::initializer_list<ParamRange> r) : ranges(r) {}
  explicit Grid(std::vector<ParamRange> r, std::function<bool(const ParamMap&)> w = {})
      : ranges(std::move(r)), where(std::move(w)) {}
};

struct IdentityInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> params;
  std::function<bool(const ParamMap&)> admissible;
  std::function<IdentityReport(const ParamMap&)> check;
  /// Grid used by `verify all` for a given bound on n.
  std::function<Grid(long max_n)> default_grid;
  /// Exhaustive witness sweep backing the identity, if it has one.
  std::function<WitnessSummary(const ParamMap&, std::size_t certificate_limit)> trace;
  /// Largest parameter point the trace sweep accepts.
  std::function<bool(const ParamMap&)> traceable;
};

const std::vector<IdentityInfo>& identity_registry();
/// Throws std::invalid_argument for an unknown name.
const IdentityInfo& find_identity(std::string_view name);

struct RunOptions {
  bool trace = false;
  std::size_t trace_limit = 16;
  std::size_t threads = 1;
  /// Test hook: identities named here get an off-by-one added to their
  /// right-hand side.
  std::vector<std::string> inject_fault;
};

/// Every admissible point of the grid, with the point in the declared
/// parameter order.
std::vector<ParamMap> grid_points(const IdentityInfo& info, const Grid& grid);

/// Runs one parameter point; throws std::invalid_argument if it is
/// inadmissible.
IdentityReport run_point(std::string_view name, const ParamMap& params, const RunOptions& options = {});

/// One report per admissible grid point, ordered by parameters.
std::vector<IdentityReport> run_grid(std::string_view name, const Grid& grid, const RunOptions& options = {});

bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace qstirl
