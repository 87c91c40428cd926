#pragma once

#include <span>
#include <vector>

#include "qstirl/qpoly.hpp"

namespace qstirl {

/// S_q[n, k] by the Carlitz recurrence
///   S_q[n, k] = S_q[n-1, k-1] + [k]_q S_q[n-1, k],
/// memoized in a per-thread table. Zero for k > n or negative arguments.
QPoly stirling_rec(long n, long k);

/// S_q[n, k] as the sum of wt over RG(n, k). Brute force; the oracle for the
/// other routes.
QPoly stirling_enum(long n, long k);

/// S_q[n, k] as h_{n-k}([1]_q, ..., [k]_q).
QPoly stirling_h(long n, long k);

/// Complete homogeneous symmetric polynomial h_d evaluated at the given
/// values: the sum over all multisets of size d drawn from them.
QPoly h_complete(long d, std::span<const QPoly> values);

/// Determinant by Laplace expansion along the first row; stays in the
/// polynomial ring. Matrix is row major and must be square.
QPoly cofactor_determinant(const std::vector<std::vector<QPoly>>& matrix);

/// The (n+1) x (n+1) matrix (S_q[s+i+j, s+j])_{0 <= i,j <= n}.
std::vector<std::vector<QPoly>> hankel_matrix(long n, long s);
QPoly hankel_det(long n, long s);
/// [s]^0 [s+1]^1 ... [s+n]^n.
QPoly hankel_rhs(long n, long s);

}  // namespace qstirl
