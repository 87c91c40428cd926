#pragma once

#include "qstirl/qpoly.hpp"

namespace qstirl {

/// [k]_q = 1 + q + ... + q^(k-1); zero for k <= 0.
QPoly q_int(long k);

/// [k]_q! = [1]_q [2]_q ... [k]_q; 1 for k = 0. Throws for k < 0.
QPoly q_factorial(long k);

/// Gaussian binomial by the q-Pascal recursion
///   [n, k] = [n-1, k-1] + q^k [n-1, k],
/// so no division is ever performed. Zero when k < 0 or k > n.
QPoly q_binomial(long n, long k);

/// ([n]_q)_k = [n]_q [n-1]_q ... [n-k+1]_q; 1 for k = 0.
/// Throws std::invalid_argument when k > n or k < 0.
QPoly q_falling(long n, long k);

/// Ordinary binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// (-q^s)^e as a signed monomial.
QPoly neg_q_power(long s, long e);

inline QPoly q_power(long e) { return QPoly::monomial(static_cast<std::size_t>(e)); }

}  // namespace qstirl
