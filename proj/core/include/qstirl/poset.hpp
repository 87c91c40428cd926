#pragma once

#include <cstddef>
#include <vector>

#include "qstirl/qpoly.hpp"
#include "qstirl/rgword.hpp"
#include "qstirl/word.hpp"

namespace qstirl {

/// One step of the repair map f: an RG-word is returned unchanged; otherwise
/// the leftmost entry exceeding (prefix max + 1) is lowered to prefix max + 1.
Word repair_step(const Word& w);

/// The projection phi = f^n onto RG-words, computed by iterating repair_step
/// to its fixed point.
RGWord phi(const Word& w);

/// v with every left-to-right maximum replaced by m. Requires m >= 1 and
/// m >= max_entry(v) (std::invalid_argument otherwise).
Word omega(const RGWord& v, Letter m);

/// The interval [v, omega_m(v)] in the entrywise order. chain_profile lists
/// the chain lengths m, m-1, ..., m-k+1 of the factor chains.
struct Interval {
  RGWord bottom;
  Word top;
  std::vector<int> chain_profile;

  bool contains(const Word& w) const { return entrywise_leq(bottom.word(), w) && entrywise_leq(w, top); }
  /// Number of words in the interval: product of the chain lengths.
  std::size_t cardinality() const;
};

Interval interval_of(const RGWord& v, Letter m);

/// phi^{-1}(v) restricted to [1,m]^n, generated from the expansion of v as
/// { j_1 u_1 j_2 u_2 ... j_k u_k : i <= j_i <= m }. Lexicographic order.
std::vector<Word> fiber(const RGWord& v, Letter m);

/// The intervals [v, omega_m(v)] for v in RG(n, k), 0 <= k <= min(m, n),
/// grouped by k ascending and lexicographic within each k.
std::vector<Interval> decompose(std::size_t n, Letter m);

struct ClosureReport {
  bool decreasing = false;   // phi(w) <= w
  bool idempotent = false;   // phi(phi(w)) == phi(w)
  bool monotone = false;     // v <= w implies phi(v) <= phi(w)

  bool all() const { return decreasing && idempotent && monotone; }
};

/// Throws std::invalid_argument on a length mismatch.
ClosureReport closure_check(const Word& v, const Word& w);

/// Sum of ls over fiber(v, m).
QPoly fiber_ls_sum(const RGWord& v, Letter m);
/// wt(v) q^C(k,2) [m]_q [m-1]_q ... [m-k+1]_q.
QPoly fiber_ls_closed_form(const RGWord& v, Letter m);

}  // namespace qstirl
