#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qstirl/certificate.hpp"
#include "qstirl/qpoly.hpp"
#include "qstirl/qseries.hpp"

namespace qstirl {

/// Values of an identity side evaluated at a list of sample points.
struct SampleValues {
  std::vector<Integer> values;
  friend bool operator==(const SampleValues&, const SampleValues&) = default;
};

using IdentityValue = std::variant<QPoly, QSeries, SampleValues>;
using ParamList = std::vector<std::pair<std::string, long>>;

struct IdentityReport {
  std::string identity;
  ParamList params;
  IdentityValue lhs;
  IdentityValue rhs;
  /// lhs == rhs structurally.
  bool equal = false;
  /// Auxiliary cross-checks (e.g. agreement with a second route).
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, std::string>> notes;
  std::chrono::nanoseconds elapsed{0};
  std::optional<WitnessSummary> trace;

  /// equal and every auxiliary check passed.
  bool passed() const;
  long param(std::string_view name) const;
};

// Each checker computes both sides by separate code paths and throws
// std::invalid_argument for parameters outside the identity's domain.

IdentityReport check_stirling_enum(long n, long k);
IdentityReport check_stirling_h(long n, long k);
IdentityReport check_mercier_recurrence(long n, long k);
IdentityReport check_q_jordan(long n, long m);
IdentityReport check_dml_rec1(long n, long k);
IdentityReport check_dml_rec2(long n, long k);
IdentityReport check_gould_gf(long k, long order);
IdentityReport check_carlitz_identity(long n, long m);
IdentityReport check_conv1(long m, long n, long k);
IdentityReport check_conv2(long n, long k, long r);
IdentityReport check_frobenius(long n, long order);
IdentityReport check_hankel(long n, long s);
IdentityReport check_carlitz_prelim(long n, long k);
IdentityReport check_carlitz_funny1(long n, long k);
IdentityReport check_carlitz_funny2(long n, long k);
IdentityReport check_two_param(long n, long r, long s);
IdentityReport check_mercier1(long n);
IdentityReport check_mercier2(long n);
IdentityReport check_prop_long(long n, long r);

/// Both sides of the symmetric-function identity
///   sum_i h_i(x_1..x_{r-1}) x_s^(n-r-i)
///     = sum_k (x_s - x_r)...(x_s - x_{k-1}) h_{n-k}(x_1..x_k)
/// for values x_0..x_n (x_0 is only read when s = 0).
std::pair<QPoly, QPoly> symmetric_sides(long n, long r, long s, std::span<const QPoly> x);

/// Under x_i = [i]_q (so x_0 = 0); also cross-checks against the
/// two-parameter identity.
IdentityReport check_symmetric(long n, long r, long s);
/// Under an explicit integer assignment x_0..x_n (x_0 a free value).
IdentityReport check_symmetric(long n, long r, long s, std::span<const Integer> assignment);
/// samples random assignments with entries in [-5, 5], deterministic in
/// (n, r, s, seed).
IdentityReport check_symmetric_sampled(long n, long r, long s, std::size_t samples = 100,
                                       std::uint64_t seed = 0x5eed);

}  // namespace qstirl
