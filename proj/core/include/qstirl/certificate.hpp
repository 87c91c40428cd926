#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qstirl/qpoly.hpp"

namespace qstirl {

/// Bookkeeping record for one application of a bijection or involution:
/// what went in, what came out, their (signed) weights, and the named
/// checks the construction is supposed to satisfy.
struct Certificate {
  std::string witness;
  std::string input;
  std::string output;
  QPoly input_weight;
  QPoly output_weight;
  std::vector<std::pair<std::string, bool>> checks;

  void check(std::string name, bool passed) { checks.emplace_back(std::move(name), passed); }
  bool ok() const {
    for (const auto& [name, passed] : checks) {
      if (!passed) return false;
    }
    return true;
  }
};

/// Aggregate over an exhaustive sweep of a witness domain.
struct WitnessSummary {
  std::string witness;
  std::size_t elements = 0;
  std::size_t fixed = 0;
  std::size_t failures = 0;
  QPoly total_weight;
  QPoly fixed_weight;
  std::vector<Certificate> certificates;

  bool ok() const { return failures == 0; }
};

}  // namespace qstirl
