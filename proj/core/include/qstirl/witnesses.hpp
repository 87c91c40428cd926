#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qstirl/certificate.hpp"
#include "qstirl/qpoly.hpp"
#include "qstirl/rgword.hpp"

namespace qstirl {

// Decompositions behind the recurrence and convolution identities. Each has
// an inverse and a certificate builder that checks the round trip and the
// weight-transfer equation for one element.

/// w in RG(n+1, k+1) with its ones removed and the other letters lowered by one.
struct MercierSplit {
  std::vector<std::size_t> one_positions;  // 1-based, ascending, always contains 1
  RGWord reduced;                          // in RG(m, k)
};

/// Throws std::invalid_argument for the empty word.
MercierSplit mercier_split(const RGWord& w);
/// Inverse of mercier_split. Rejects position sets missing position 1 or
/// not fitting a word of length |one_positions| + |reduced|.
RGWord mercier_merge(std::span<const std::size_t> one_positions, const RGWord& reduced);
/// wt(w) = q^(m-k) wt(u).
Certificate mercier_certificate(const RGWord& w);

/// w = x (k+1) y split at the first occurrence of its max entry k+1.
struct Dml1Factor {
  RGWord prefix;  // x in RG(j, k)
  Word tail;      // y over [1, k+1]
};

Dml1Factor dml1_factor(const RGWord& w);
RGWord dml1_merge(const RGWord& prefix, const Word& tail);
/// wt(w) = wt(x) ls(y).
Certificate dml1_certificate(const RGWord& w);

/// w = x y z where the last letter i of x is a left-to-right maximum and y
/// is a nonempty word over [1, i].
struct Dml2Factorization {
  Word x;
  Word y;
  Word z;
  Letter pivot;
};

/// All such factorizations; there are exactly n - k of them.
std::vector<Dml2Factorization> dml2_factorizations(const RGWord& w);
/// Inserts y right after the first occurrence of letter i in u.
RGWord dml2_insert(const RGWord& u, Letter i, const Word& y);
/// Checks every factorization of w: u = x z lies in RG(n - |y|, k),
/// reinserting y recovers w, wt(w) = wt(u) ls(y), and the count is n - k.
Certificate dml2_certificate(const RGWord& w);

/// The tail of a word split by a letter threshold: letters above the
/// threshold form the high subword (recorded shifted down), the rest stay as
/// low letters.
struct TailSplit {
  std::size_t length = 0;
  std::vector<std::size_t> high_positions;  // 1-based within the tail
  RGWord high_shifted;
  Word low_letters;
};

/// w in RG(m+n, k) as u z with |u| = n, i = max(u), threshold i.
struct Conv1Decomposition {
  RGWord head;  // u in RG(n, i)
  TailSplit tail;
  int total_max = 0;  // k

  /// i (i + j - k), the weight lost to the shift.
  long shift_exponent() const;
};

/// Throws std::invalid_argument if n exceeds the word length.
Conv1Decomposition conv1_decompose(const RGWord& w, std::size_t n);
RGWord conv1_compose(const Conv1Decomposition& d);
/// wt(w) = wt(u) wt(v^(-i)) q^(i(i+j-k)) ls(low).
Certificate conv1_certificate(const RGWord& w, std::size_t n);

/// w in RG(n+1, k+r+1) as x (k+1) y with x in RG(n-i, k), threshold k+1.
struct Conv2Decomposition {
  RGWord head;  // x
  TailSplit tail;
  int k = 0;
  int r = 0;

  /// (k+1)(j - r).
  long shift_exponent() const;
};

/// Requires max_entry(w) == k + r + 1 (std::invalid_argument otherwise).
Conv2Decomposition conv2_decompose(const RGWord& w, int k, int r);
RGWord conv2_compose(const Conv2Decomposition& d);
/// wt(w) = wt(x) wt(v^(-k-1)) q^((k+1)(j-r)) ls(low).
Certificate conv2_certificate(const RGWord& w, int k, int r);

}  // namespace qstirl
