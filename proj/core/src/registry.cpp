#include "qstirl/registry.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>
#include <type_traits>

#include "qstirl/blocks.hpp"
#include "qstirl/det_tuples.hpp"
#include "qstirl/marked.hpp"
#include "qstirl/poset.hpp"
#include "qstirl/rgword.hpp"
#include "qstirl/witnesses.hpp"

namespace qstirl {

namespace {

long get(const ParamMap& p, std::string_view key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter " + std::string(key));
  return it->second;
}

bool nonneg(const ParamMap& p) {
  return std::all_of(p.begin(), p.end(), [](const auto& kv) { return kv.second >= 0; });
}

// Exhaustive sweep of a bijection over RG(n, k). Adds a certificate that
// no two inputs share an output.
WitnessSummary sweep_bijection(std::string name, std::size_t n, int k, std::size_t limit,
                               const std::function<Certificate(const RGWord&)>& certify) {
  WitnessSummary summary;
  summary.witness = std::move(name);
  std::set<std::string> outputs;
  bool injective = true;
  std::vector<Certificate> kept;
  for_each_rg(n, k, [&](const RGWord& w) {
    Certificate cert = certify(w);
    ++summary.elements;
    if (!cert.ok()) ++summary.failures;
    summary.total_weight += cert.input_weight;
    if (!outputs.insert(cert.output).second) injective = false;
    if (kept.size() < limit) kept.push_back(std::move(cert));
  });
  Certificate global;
  global.witness = summary.witness;
  global.input = "RG(" + std::to_string(n) + "," + std::to_string(k) + ")";
  global.output = std::to_string(outputs.size()) + " images";
  global.input_weight = summary.total_weight;
  global.output_weight = summary.total_weight;
  global.check("injective", injective);
  if (!global.ok()) ++summary.failures;
  summary.certificates.push_back(std::move(global));
  for (auto& c : kept) summary.certificates.push_back(std::move(c));
  return summary;
}

// Rank generating function of each fiber of the repair map.
WitnessSummary sweep_fibers(long n, long m, std::size_t limit) {
  WitnessSummary summary;
  summary.witness = "fiber_rank";
  for (long k = 0; k <= std::min(n, m); ++k) {
    for_each_rg(static_cast<std::size_t>(n), static_cast<int>(k), [&](const RGWord& v) {
      Certificate cert;
      cert.witness = summary.witness;
      cert.input = to_string(v);
      cert.output = "m=" + std::to_string(m);
      cert.input_weight = fiber_ls_sum(v, static_cast<Letter>(m));
      cert.output_weight = fiber_ls_closed_form(v, static_cast<Letter>(m));
      cert.check("closed_form", cert.input_weight == cert.output_weight);
      ++summary.elements;
      if (!cert.ok()) ++summary.failures;
      summary.total_weight += cert.input_weight;
      if (summary.certificates.size() < limit) summary.certificates.push_back(std::move(cert));
    });
  }
  return summary;
}

std::vector<IdentityInfo> build_registry() {
  std::vector<IdentityInfo> r;
  auto nk_le = [](const ParamMap& p) { return nonneg(p) && get(p, "k") <= get(p, "n"); };
  auto nk_grid = [](long max_n) { return Grid{{"n", 0, max_n}, {"k", 0, max_n}}; };

  r.push_back({"stirling_enum", "recurrence agrees with RG-word enumeration", {"n", "k"}, nk_le,
               [](const ParamMap& p) { return check_stirling_enum(get(p, "n"), get(p, "k")); }, nk_grid, {}, {}});
  r.push_back({"stirling_h", "recurrence agrees with the complete homogeneous specialization", {"n", "k"}, nk_le,
               [](const ParamMap& p) { return check_stirling_h(get(p, "n"), get(p, "k")); }, nk_grid, {}, {}});

  r.push_back({"mercier_recurrence", "S[n+1,k+1] = sum_m C(n,m) q^(m-k) S[m,k]", {"n", "k"}, nk_le,
               [](const ParamMap& p) { return check_mercier_recurrence(get(p, "n"), get(p, "k")); }, nk_grid,
               [](const ParamMap& p, std::size_t limit) {
                 return sweep_bijection("mercier_split", static_cast<std::size_t>(get(p, "n") + 1),
                                        static_cast<int>(get(p, "k") + 1), limit,
                                        [](const RGWord& w) { return mercier_certificate(w); });
               },
               [](const ParamMap& p) { return get(p, "n") <= 9; }});

  r.push_back({"q_jordan", "q^(n-m) S[n,m] = sum_k (-1)^(n-k) C(n,k) S[k+1,m+1]", {"n", "m"},
               [](const ParamMap& p) { return nonneg(p) && get(p, "m") <= get(p, "n"); },
               [](const ParamMap& p) { return check_q_jordan(get(p, "n"), get(p, "m")); },
               [](long max_n) { return Grid{{"n", 0, max_n}, {"m", 0, max_n}}; }, {}, {}});

  r.push_back({"dml_rec1", "S[n+1,k+1] = sum_j [k+1]^(n-j) S[j,k]", {"n", "k"}, nk_le,
               [](const ParamMap& p) { return check_dml_rec1(get(p, "n"), get(p, "k")); }, nk_grid,
               [](const ParamMap& p, std::size_t limit) {
                 return sweep_bijection("dml1_factor", static_cast<std::size_t>(get(p, "n") + 1),
                                        static_cast<int>(get(p, "k") + 1), limit,
                                        [](const RGWord& w) { return dml1_certificate(w); });
               },
               [](const ParamMap& p) { return get(p, "n") <= 9; }});

  r.push_back({"dml_rec2", "(n-k) S[n,k] = sum_j S[n-j,k] sum_i [i]^j", {"n", "k"}, nk_le,
               [](const ParamMap& p) { return check_dml_rec2(get(p, "n"), get(p, "k")); }, nk_grid,
               [](const ParamMap& p, std::size_t limit) {
                 WitnessSummary s;
                 s.witness = "dml2_insert";
                 for_each_rg(static_cast<std::size_t>(get(p, "n")), static_cast<int>(get(p, "k")),
                             [&](const RGWord& w) {
                               Certificate c = dml2_certificate(w);
                               ++s.elements;
                               if (!c.ok()) ++s.failures;
                               s.total_weight += c.input_weight;
                               if (s.certificates.size() < limit) s.certificates.push_back(std::move(c));
                             });
                 return s;
               },
               [](const ParamMap& p) { return get(p, "n") <= 9; }});

  r.push_back({"gould_gf", "sum_n S[n,k] t^n = t^k / prod_i (1 - [i] t)", {"k", "N"},
               [](const ParamMap& p) { return nonneg(p) && get(p, "k") <= get(p, "N"); },
               [](const ParamMap& p) { return check_gould_gf(get(p, "k"), get(p, "N")); },
               [](long max_n) { return Grid{{"k", 0, std::min(max_n, 5L)}, {"N", 12, 12}}; }, {}, {}});

  r.push_back({"carlitz_identity", "[m]^n = sum_k q^C(k,2) S[n,k] [k]! [m choose k]", {"n", "m"}, nonneg,
               [](const ParamMap& p) { return check_carlitz_identity(get(p, "n"), get(p, "m")); },
               [](long max_n) {
                 long b = std::min(max_n, 6L);
                 return Grid{{"n", 0, b}, {"m", 0, b}};
               },
               [](const ParamMap& p, std::size_t limit) { return sweep_fibers(get(p, "n"), get(p, "m"), limit); },
               [](const ParamMap& p) { return get(p, "n") <= 7 && get(p, "m") <= 7; }});

  r.push_back({"conv1", "convolution S[m+n,k] over split points", {"m", "n", "k"},
               [](const ParamMap& p) { return nonneg(p) && get(p, "k") <= get(p, "m") + get(p, "n"); },
               [](const ParamMap& p) { return check_conv1(get(p, "m"), get(p, "n"), get(p, "k")); },
               [](long max_n) {
                 return Grid({{"m", 0, max_n}, {"n", 0, max_n}, {"k", 0, max_n}},
                             [max_n](const ParamMap& p) { return get(p, "m") + get(p, "n") <= max_n; });
               },
               [](const ParamMap& p, std::size_t limit) {
                 const auto n = static_cast<std::size_t>(get(p, "n"));
                 return sweep_bijection("conv1_decompose", n + static_cast<std::size_t>(get(p, "m")),
                                        static_cast<int>(get(p, "k")), limit,
                                        [n](const RGWord& w) { return conv1_certificate(w, n); });
               },
               [](const ParamMap& p) { return get(p, "m") + get(p, "n") <= 9; }});

  r.push_back({"conv2", "convolution S[n+1,k+r+1] by the first occurrence of k+1", {"n", "k", "r"},
               [](const ParamMap& p) { return nonneg(p) && get(p, "k") + get(p, "r") <= get(p, "n"); },
               [](const ParamMap& p) { return check_conv2(get(p, "n"), get(p, "k"), get(p, "r")); },
               [](long max_n) {
                 long b = std::max(0L, max_n - 1);
                 return Grid{{"n", 0, b}, {"k", 0, b}, {"r", 0, b}};
               },
               [](const ParamMap& p, std::size_t limit) {
                 const int k = static_cast<int>(get(p, "k"));
                 const int rr = static_cast<int>(get(p, "r"));
                 return sweep_bijection("conv2_decompose", static_cast<std::size_t>(get(p, "n") + 1), k + rr + 1,
                                        limit, [k, rr](const RGWord& w) { return conv2_certificate(w, k, rr); });
               },
               [](const ParamMap& p) { return get(p, "n") <= 8; }});

  r.push_back({"frobenius", "sum_m [m]^n x^m in falling products of 1/(1 - q^i x)", {"n", "N"},
               [](const ParamMap& p) { return nonneg(p) && get(p, "n") <= get(p, "N"); },
               [](const ParamMap& p) { return check_frobenius(get(p, "n"), get(p, "N")); },
               [](long max_n) { return Grid{{"n", 0, std::min(max_n, 4L)}, {"N", 12, 12}}; }, {}, {}});

  r.push_back({"hankel", "det(S[s+i+j, s+j]) = prod_i [s+i]^i", {"n", "s"}, nonneg,
               [](const ParamMap& p) { return check_hankel(get(p, "n"), get(p, "s")); },
               [](long max_n) { return Grid{{"n", 0, std::min(max_n, 4L)}, {"s", 0, std::min(max_n, 3L)}}; },
               [](const ParamMap& p, std::size_t limit) {
                 DetSweep d = det_sweep(get(p, "n"), get(p, "s"), limit);
                 return d.summary;
               },
               [](const ParamMap& p) { return get(p, "n") <= 2 && get(p, "s") <= 2; }});

  r.push_back({"carlitz_prelim", "(1-q)^(n-k) S[n,k] via q-binomials with signed q-powers", {"n", "k"},
               [](const ParamMap& p) { return nonneg(p) && get(p, "k") <= get(p, "n") && get(p, "n") >= 1; },
               [](const ParamMap& p) { return check_carlitz_prelim(get(p, "n"), get(p, "k")); }, nk_grid,
               [](const ParamMap& p, std::size_t limit) {
                 return prelim_sweep(static_cast<std::size_t>(get(p, "n")), static_cast<int>(get(p, "k")), limit);
               },
               [](const ParamMap& p) { return get(p, "n") <= 8; }});

  r.push_back({"carlitz_funny1", "(1-q)^(n-k) S[n,k] = sum_j (-1)^j C(n,k+j) [j+k choose j]", {"n", "k"}, nk_le,
               [](const ParamMap& p) { return check_carlitz_funny1(get(p, "n"), get(p, "k")); }, nk_grid, {}, {}});

  r.push_back({"carlitz_funny2", "[n choose k] = sum_j (q-1)^(j-k) C(n,j) S[j,k]", {"n", "k"}, nk_le,
               [](const ParamMap& p) { return check_carlitz_funny2(get(p, "n"), get(p, "k")); }, nk_grid,
               [](const ParamMap& p, std::size_t limit) {
                 return carlitz2_sweep(static_cast<std::size_t>(get(p, "n")), static_cast<int>(get(p, "k")), limit);
               },
               [](const ParamMap& p) { return get(p, "n") <= 6; }});

  auto nrs_ok = [](const ParamMap& p) {
    return get(p, "s") >= 0 && get(p, "s") < get(p, "r") && get(p, "r") <= get(p, "n");
  };
  auto nrs_grid = [](long max_n) { return Grid{{"n", 1, max_n}, {"r", 1, max_n}, {"s", 0, max_n}}; };

  r.push_back({"two_param", "sum_k (-q^s)^(k-r) ([k-s-1])_(k-r) S[n,k] = sum_i S[i,r-1] [s]^(n-i-1)",
               {"n", "r", "s"}, nrs_ok,
               [](const ParamMap& p) { return check_two_param(get(p, "n"), get(p, "r"), get(p, "s")); }, nrs_grid,
               [](const ParamMap& p, std::size_t limit) {
                 return blocks_sweep(BlockParams{get(p, "n"), get(p, "r"), get(p, "s")}, limit);
               },
               [](const ParamMap& p) { return get(p, "n") <= 9; }});

  r.push_back({"mercier1", "sum_k (-1)^k [k-1]! S[n,k] = 0", {"n"},
               [](const ParamMap& p) { return get(p, "n") >= 2; },
               [](const ParamMap& p) { return check_mercier1(get(p, "n")); },
               [](long max_n) { return Grid{{"n", 2, max_n}}; }, {}, {}});
  r.push_back({"mercier2", "sum_k (-1)^k q^(k-2) [k-2]! S[n,k] = n-1", {"n"},
               [](const ParamMap& p) { return get(p, "n") >= 2; },
               [](const ParamMap& p) { return check_mercier2(get(p, "n")); },
               [](long max_n) { return Grid{{"n", 2, max_n}}; }, {}, {}});

  r.push_back({"prop_long", "two_param at r = s+1 against a composition sum", {"n", "r"},
               [](const ParamMap& p) { return get(p, "r") >= 2 && get(p, "r") <= get(p, "n"); },
               [](const ParamMap& p) { return check_prop_long(get(p, "n"), get(p, "r")); },
               [](long max_n) { return Grid{{"n", 2, max_n}, {"r", 2, max_n}}; }, {}, {}});

  r.push_back({"symmetric", "symmetric-function identity under x_i = [i]", {"n", "r", "s"}, nrs_ok,
               [](const ParamMap& p) { return check_symmetric(get(p, "n"), get(p, "r"), get(p, "s")); },
               [nrs_grid](long max_n) { return nrs_grid(std::min(max_n, 6L)); }, {}, {}});
  r.push_back({"symmetric_sampled", "symmetric-function identity at 100 random integer points", {"n", "r", "s"},
               nrs_ok,
               [](const ParamMap& p) { return check_symmetric_sampled(get(p, "n"), get(p, "r"), get(p, "s")); },
               [nrs_grid](long max_n) { return nrs_grid(std::min(max_n, 6L)); }, {}, {}});
  return r;
}

void inject(IdentityValue& v) {
  std::visit(
      [](auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, QPoly>) {
          x += QPoly{1};
        } else if constexpr (std::is_same_v<T, QSeries>) {
          x.set_coeff(0, x.coeff(0) + QPoly{1});
        } else {
          if (x.values.empty()) x.values.push_back(1);
          else x.values.front() += 1;
        }
      },
      v);
}

IdentityReport run_checked(const IdentityInfo& info, const ParamMap& params, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  IdentityReport rep = info.check(params);
  if (std::find(options.inject_fault.begin(), options.inject_fault.end(), info.name) != options.inject_fault.end()) {
    inject(rep.rhs);
    rep.equal = rep.lhs == rep.rhs;
    rep.notes.emplace_back("fault", "injected");
  }
  if (options.trace && info.trace && (!info.traceable || info.traceable(params))) {
    rep.trace = info.trace(params, options.trace_limit);
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> registry = build_registry();
  return registry;
}

const IdentityInfo& find_identity(std::string_view name) {
  for (const auto& info : identity_registry()) {
    if (info.name == name) return info;
  }
  throw std::invalid_argument("unknown identity: " + std::string(name));
}

std::vector<ParamMap> grid_points(const IdentityInfo& info, const Grid& grid) {
  for (const auto& name : info.params) {
    bool found =
        std::any_of(grid.ranges.begin(), grid.ranges.end(), [&](const ParamRange& pr) { return pr.name == name; });
    if (!found) throw std::invalid_argument(info.name + ": grid lacks parameter " + name);
  }
  std::vector<ParamRange> ranges;
  for (const auto& name : info.params) {
    for (const auto& pr : grid.ranges) {
      if (pr.name == name) ranges.push_back(pr);
    }
  }
  std::vector<ParamMap> out;
  if (std::any_of(ranges.begin(), ranges.end(), [](const ParamRange& pr) { return pr.hi < pr.lo; })) return out;
  std::vector<long> cur;
  for (const auto& pr : ranges) cur.push_back(pr.lo);
  while (true) {
    ParamMap point;
    for (std::size_t i = 0; i < ranges.size(); ++i) point[ranges[i].name] = cur[i];
    if (info.admissible(point) && (!grid.where || grid.where(point))) out.push_back(std::move(point));
    std::size_t i = ranges.size();
    while (i > 0) {
      --i;
      if (cur[i] < ranges[i].hi) {
        ++cur[i];
        break;
      }
      cur[i] = ranges[i].lo;
      if (i == 0) return out;
    }
    if (ranges.empty()) return out;
  }
}

IdentityReport run_point(std::string_view name, const ParamMap& params, const RunOptions& options) {
  const IdentityInfo& info = find_identity(name);
  for (const auto& p : info.params) {
    if (params.find(p) == params.end()) throw std::invalid_argument(info.name + ": missing parameter " + p);
  }
  if (!info.admissible(params)) throw std::invalid_argument(info.name + ": parameters outside the domain");
  return run_checked(info, params, options);
}

std::vector<IdentityReport> run_grid(std::string_view name, const Grid& grid, const RunOptions& options) {
  const IdentityInfo& info = find_identity(name);
  std::vector<ParamMap> points = grid_points(info, grid);
  std::vector<IdentityReport> out(points.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, points.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = run_checked(info, points[i], options);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < points.size(); i += workers) out[i] = run_checked(info, points[i], options);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed(); });
}

}  // namespace qstirl
