#include "qstirl/identities.hpp"

#include <random>
#include <stdexcept>

#include "qstirl/qanalog.hpp"
#include "qstirl/stirling.hpp"

namespace qstirl {

bool IdentityReport::passed() const {
  if (!equal) return false;
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

long IdentityReport::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw std::out_of_range("no parameter " + std::string(name));
}

namespace {

using std::size_t;

QPoly S(long n, long k) { return stirling_rec(n, k); }
QPoly qi(long k) { return q_int(k); }
QPoly qpow(long e) { return q_power(e); }
QPoly num(const Integer& c) { return QPoly::constant(c); }

long c2(long k) { return k * (k - 1) / 2; }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

IdentityReport report(std::string name, ParamList params, IdentityValue lhs, IdentityValue rhs) {
  IdentityReport r;
  r.identity = std::move(name);
  r.params = std::move(params);
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace

IdentityReport check_stirling_enum(long n, long k) {
  require(n >= 0 && k >= 0, "stirling_enum: n, k >= 0");
  return report("stirling_enum", {{"n", n}, {"k", k}}, S(n, k), stirling_enum(n, k));
}

IdentityReport check_stirling_h(long n, long k) {
  require(n >= 0 && k >= 0, "stirling_h: n, k >= 0");
  return report("stirling_h", {{"n", n}, {"k", k}}, S(n, k), stirling_h(n, k));
}

IdentityReport check_mercier_recurrence(long n, long k) {
  require(n >= 0 && k >= 0, "mercier_recurrence: n, k >= 0");
  QPoly rhs;
  for (long m = k; m <= n; ++m) rhs += (qpow(m - k) * S(m, k)).scaled(binomial(n, m));
  return report("mercier_recurrence", {{"n", n}, {"k", k}}, S(n + 1, k + 1), rhs);
}

IdentityReport check_q_jordan(long n, long m) {
  require(0 <= m && m <= n, "q_jordan: 0 <= m <= n");
  QPoly lhs = S(n, m).shifted(static_cast<size_t>(n - m));
  QPoly rhs;
  for (long k = m; k <= n; ++k) {
    QPoly term = S(k + 1, m + 1).scaled(binomial(n, k));
    if ((n - k) % 2) rhs -= term;
    else rhs += term;
  }
  return report("q_jordan", {{"n", n}, {"m", m}}, lhs, rhs);
}

IdentityReport check_dml_rec1(long n, long k) {
  require(n >= 0 && k >= 0, "dml_rec1: n, k >= 0");
  QPoly rhs;
  for (long j = k; j <= n; ++j) rhs += qi(k + 1).pow(static_cast<size_t>(n - j)) * S(j, k);
  return report("dml_rec1", {{"n", n}, {"k", k}}, S(n + 1, k + 1), rhs);
}

IdentityReport check_dml_rec2(long n, long k) {
  require(0 <= k && k <= n, "dml_rec2: 0 <= k <= n");
  QPoly lhs = S(n, k).scaled(Integer(n - k));
  QPoly rhs;
  for (long j = 1; j <= n - k; ++j) {
    QPoly power_sum;
    for (long i = 1; i <= k; ++i) power_sum += qi(i).pow(static_cast<size_t>(j));
    rhs += S(n - j, k) * power_sum;
  }
  return report("dml_rec2", {{"n", n}, {"k", k}}, lhs, rhs);
}

IdentityReport check_gould_gf(long k, long order) {
  require(0 <= k && k <= order, "gould_gf: 0 <= k <= N");
  const auto N = static_cast<size_t>(order);
  QSeries lhs(N);
  for (long n = 0; n <= order; ++n) lhs.set_coeff(static_cast<size_t>(n), S(n, k));
  QSeries rhs = QSeries::one(N);
  for (long i = 1; i <= k; ++i) rhs = rhs * QSeries::geometric(qi(i), N);
  rhs = rhs.shifted(static_cast<size_t>(k));
  return report("gould_gf", {{"k", k}, {"N", order}}, lhs, rhs);
}

IdentityReport check_carlitz_identity(long n, long m) {
  require(n >= 0 && m >= 0, "carlitz_identity: n, m >= 0");
  QPoly rhs;
  for (long k = 0; k <= n; ++k) {
    rhs += qpow(c2(k)) * S(n, k) * q_factorial(k) * q_binomial(m, k);
  }
  return report("carlitz_identity", {{"n", n}, {"m", m}}, qi(m).pow(static_cast<size_t>(n)), rhs);
}

IdentityReport check_conv1(long m, long n, long k) {
  require(m >= 0 && n >= 0 && k >= 0, "conv1: m, n, k >= 0");
  QPoly rhs;
  for (long i = 0; i <= std::min(n, k); ++i) {
    for (long j = 0; j <= m; ++j) {
      if (i + j < k) continue;
      rhs += (qpow(i * (i + j - k)) * qi(i).pow(static_cast<size_t>(m - j)) * S(n, i) * S(j, k - i))
                 .scaled(binomial(m, j));
    }
  }
  return report("conv1", {{"m", m}, {"n", n}, {"k", k}}, S(m + n, k), rhs);
}

IdentityReport check_conv2(long n, long k, long r) {
  require(n >= 0 && k >= 0 && r >= 0, "conv2: n, k, r >= 0");
  QPoly rhs;
  for (long i = 0; i <= n; ++i) {
    for (long j = r; j <= i; ++j) {
      rhs += (qpow((k + 1) * (j - r)) * qi(k + 1).pow(static_cast<size_t>(i - j)) * S(j, r) * S(n - i, k))
                 .scaled(binomial(i, j));
    }
  }
  return report("conv2", {{"n", n}, {"k", k}, {"r", r}}, S(n + 1, k + r + 1), rhs);
}

IdentityReport check_frobenius(long n, long order) {
  require(0 <= n && n <= order, "frobenius: 0 <= n <= N");
  const auto N = static_cast<size_t>(order);
  QSeries lhs(N);
  for (long m = 0; m <= order; ++m) lhs.set_coeff(static_cast<size_t>(m), qi(m).pow(static_cast<size_t>(n)));
  QSeries rhs(N);
  for (long k = 0; k <= n; ++k) {
    QSeries term = QSeries::one(N);
    for (long i = 0; i <= k; ++i) term = term * QSeries::geometric(qpow(i), N);
    rhs += term.shifted(static_cast<size_t>(k)).scaled(qpow(c2(k)) * S(n, k) * q_factorial(k));
  }
  return report("frobenius", {{"n", n}, {"N", order}}, lhs, rhs);
}

IdentityReport check_hankel(long n, long s) {
  require(n >= 0 && s >= 0, "hankel: n, s >= 0");
  return report("hankel", {{"n", n}, {"s", s}}, hankel_det(n, s), hankel_rhs(n, s));
}

IdentityReport check_carlitz_prelim(long n, long k) {
  require(0 <= k && k <= n && n >= 1, "carlitz_prelim: 0 <= k <= n, (n, k) != (0, 0)");
  QPoly lhs = QPoly{1, -1}.pow(static_cast<size_t>(n - k)) * S(n, k);
  QPoly rhs;
  for (long j = 0; j <= n - k; ++j) {
    rhs += (neg_q_power(1, j) * q_binomial(j + k - 1, j)).scaled(binomial(n - 1, n - k - j));
  }
  return report("carlitz_prelim", {{"n", n}, {"k", k}}, lhs, rhs);
}

IdentityReport check_carlitz_funny1(long n, long k) {
  require(0 <= k && k <= n, "carlitz_funny1: 0 <= k <= n");
  QPoly lhs = QPoly{1, -1}.pow(static_cast<size_t>(n - k)) * S(n, k);
  QPoly rhs;
  for (long j = 0; j <= n - k; ++j) {
    QPoly term = q_binomial(j + k, j).scaled(binomial(n, k + j));
    if (j % 2) rhs -= term;
    else rhs += term;
  }
  return report("carlitz_funny1", {{"n", n}, {"k", k}}, lhs, rhs);
}

IdentityReport check_carlitz_funny2(long n, long k) {
  require(n >= 0 && k >= 0, "carlitz_funny2: n, k >= 0");
  QPoly rhs;
  for (long j = k; j <= n; ++j) {
    rhs += (QPoly{-1, 1}.pow(static_cast<size_t>(j - k)) * S(j, k)).scaled(binomial(n, j));
  }
  return report("carlitz_funny2", {{"n", n}, {"k", k}}, q_binomial(n, k), rhs);
}

IdentityReport check_two_param(long n, long r, long s) {
  require(0 <= s && s < r && r <= n, "two_param: 0 <= s < r <= n");
  QPoly lhs;
  for (long k = r; k <= n; ++k) lhs += neg_q_power(s, k - r) * q_falling(k - s - 1, k - r) * S(n, k);
  QPoly rhs;
  for (long i = r - 1; i <= n - 1; ++i) rhs += S(i, r - 1) * qi(s).pow(static_cast<size_t>(n - i - 1));
  return report("two_param", {{"n", n}, {"r", r}, {"s", s}}, lhs, rhs);
}

IdentityReport check_mercier1(long n) {
  require(n >= 2, "mercier1: n >= 2");
  QPoly lhs;
  for (long k = 1; k <= n; ++k) {
    QPoly term = q_factorial(k - 1) * S(n, k);
    if (k % 2) lhs -= term;
    else lhs += term;
  }
  return report("mercier1", {{"n", n}}, lhs, QPoly{});
}

IdentityReport check_mercier2(long n) {
  require(n >= 2, "mercier2: n >= 2");
  QPoly lhs;
  for (long k = 2; k <= n; ++k) {
    QPoly term = qpow(k - 2) * q_factorial(k - 2) * S(n, k);
    if (k % 2) lhs -= term;
    else lhs += term;
  }
  return report("mercier2", {{"n", n}}, lhs, num(Integer(n - 1)));
}

namespace {

// Sum over weak compositions c_1 + ... + c_{r-1} = total of
// c_{r-1} * prod_{i<r-1} [i]^{c_i} * [r-1]^{c_{r-1}-1}.
void prop_long_sum(long part, long parts, long remaining, const QPoly& acc, QPoly& out) {
  if (part == parts) {
    if (remaining >= 1) {
      out += (acc * qi(parts).pow(static_cast<size_t>(remaining - 1))).scaled(Integer(remaining));
    }
    return;
  }
  for (long c = 0; c <= remaining; ++c) {
    prop_long_sum(part + 1, parts, remaining - c, acc * qi(part).pow(static_cast<size_t>(c)), out);
  }
}

}  // namespace

IdentityReport check_prop_long(long n, long r) {
  require(2 <= r && r <= n, "prop_long: 2 <= r <= n");
  QPoly lhs;
  for (long k = r; k <= n; ++k) lhs += neg_q_power(r - 1, k - r) * q_falling(k - r, k - r) * S(n, k);
  QPoly rhs;
  prop_long_sum(1, r - 1, n - r + 1, QPoly{1}, rhs);
  return report("prop_long", {{"n", n}, {"r", r}}, lhs, rhs);
}

std::pair<QPoly, QPoly> symmetric_sides(long n, long r, long s, std::span<const QPoly> x) {
  require(0 <= s && s < r && r <= n, "symmetric: 0 <= s < r <= n");
  require(x.size() == static_cast<size_t>(n + 1), "symmetric: need values x_0..x_n");
  const QPoly& xs = x[static_cast<size_t>(s)];
  QPoly lhs;
  auto head = x.subspan(1, static_cast<size_t>(r - 1));
  for (long i = 0; i <= n - r; ++i) lhs += h_complete(i, head) * xs.pow(static_cast<size_t>(n - r - i));
  QPoly rhs;
  QPoly prod{1};
  for (long k = r; k <= n; ++k) {
    rhs += prod * h_complete(n - k, x.subspan(1, static_cast<size_t>(k)));
    prod *= xs - x[static_cast<size_t>(k)];
  }
  return {lhs, rhs};
}

IdentityReport check_symmetric(long n, long r, long s) {
  require(0 <= s && s < r && r <= n, "symmetric: 0 <= s < r <= n");
  std::vector<QPoly> x;
  for (long i = 0; i <= n; ++i) x.push_back(qi(i));
  auto [lhs, rhs] = symmetric_sides(n, r, s, x);
  IdentityReport two = check_two_param(n, r, s);
  IdentityReport out = report("symmetric", {{"n", n}, {"r", r}, {"s", s}}, lhs, rhs);
  out.checks.emplace_back("lhs_matches_two_param_rhs", IdentityValue(lhs) == two.rhs);
  out.checks.emplace_back("rhs_matches_two_param_lhs", IdentityValue(rhs) == two.lhs);
  out.notes.emplace_back("x0_mode", "substituted");
  return out;
}

IdentityReport check_symmetric(long n, long r, long s, std::span<const Integer> assignment) {
  std::vector<QPoly> x;
  for (const auto& v : assignment) x.push_back(num(v));
  auto [lhs, rhs] = symmetric_sides(n, r, s, x);
  IdentityReport out = report("symmetric", {{"n", n}, {"r", r}, {"s", s}}, lhs, rhs);
  std::string shown;
  for (const auto& v : assignment) shown += (shown.empty() ? "" : ",") + v.get_str();
  out.notes.emplace_back("x0_mode", "variable");
  out.notes.emplace_back("assignment", shown);
  return out;
}

IdentityReport check_symmetric_sampled(long n, long r, long s, std::size_t samples, std::uint64_t seed) {
  require(0 <= s && s < r && r <= n, "symmetric_sampled: 0 <= s < r <= n");
  std::seed_seq seq{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r),
                    static_cast<std::uint64_t>(s)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> dist(-5, 5);
  SampleValues lhs;
  SampleValues rhs;
  std::vector<QPoly> x(static_cast<size_t>(n + 1));
  for (size_t t = 0; t < samples; ++t) {
    for (auto& v : x) v = num(Integer(dist(rng)));
    auto [l, rr] = symmetric_sides(n, r, s, x);
    lhs.values.push_back(l.coeff(0));
    rhs.values.push_back(rr.coeff(0));
  }
  IdentityReport out = report("symmetric_sampled", {{"n", n}, {"r", r}, {"s", s}}, lhs, rhs);
  out.notes.emplace_back("x0_mode", "variable");
  out.notes.emplace_back("samples", std::to_string(samples));
  return out;
}

}  // namespace qstirl
