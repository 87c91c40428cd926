#pragma once

#include <cstddef>
#include <vector>

#include "qstirl/certificate.hpp"
#include "qstirl/qpoly.hpp"
#include "qstirl/rgword.hpp"

namespace qstirl {

/// A term of the Leibniz expansion of det(S_q[s+i+j, s+j]): a permutation
/// sigma of {0..n} and words w(i) in RG(s+i+sigma(i), s+sigma(i)).
struct DetTuple {
  long n = 0;
  long s = 0;
  std::vector<int> sigma;
  std::vector<RGWord> words;

  friend bool operator==(const DetTuple&, const DetTuple&) = default;
};

enum class DetClass { T1, T2 };

/// Checks sigma is a permutation and each word has the required shape.
bool is_valid(const DetTuple& t);

/// a_i: repeated entries of w(i) beyond position s+i.
std::vector<int> repeat_counts(const DetTuple& t);

/// T1 iff the repeat counts are pairwise distinct.
DetClass det_classify(const DetTuple& t);

/// On T2: takes the lexicographically least pair (j, k) with a_j = a_k,
/// composes sigma with the transposition (j k) and swaps the tails of w(j),
/// w(k) cut after positions s+j and s+k. Throws std::invalid_argument on T1.
DetTuple det_involution(const DetTuple& t);

int permutation_sign(const std::vector<int>& sigma);
/// Product of wt(w(i)).
QPoly det_weight(const DetTuple& t);
/// sign(sigma) * det_weight(t).
QPoly det_signed_weight(const DetTuple& t);

/// All of T. Exhaustive, so limited to n <= 2 and s <= 2
/// (std::invalid_argument otherwise).
std::vector<DetTuple> enumerate_det_tuples(long n, long s);

std::string to_string(const DetTuple& t);

Certificate det_certificate(const DetTuple& t);

struct DetSweep {
  WitnessSummary summary;
  QPoly t1_weight;  // signed sum over T1
  QPoly t2_weight;  // signed sum over T2
};

/// Runs classification and the involution over all of T, recording
/// certificates for at most certificate_limit elements.
DetSweep det_sweep(long n, long s, std::size_t certificate_limit = 0);

}  // namespace qstirl
