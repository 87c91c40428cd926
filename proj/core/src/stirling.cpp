#include "qstirl/stirling.hpp"

#include <stdexcept>
#include <string>

#include "qstirl/qanalog.hpp"
#include "qstirl/rgword.hpp"

namespace qstirl {

namespace {

// [k]_q * p as a sliding window sum over k consecutive coefficients.
QPoly times_q_int(const QPoly& p, std::size_t k) {
  const auto& c = p.coefficients();
  if (c.empty() || k == 0) return {};
  std::vector<Integer> out(c.size() + k - 1);
  Integer window;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c.size()) window += c[i];
    if (i >= k) window -= c[i - k];
    out[i] = window;
  }
  return QPoly(std::move(out));
}

// Rows of the Carlitz triangle; row n holds S_q[n, 0..n].
class StirlingTable {
public:
  const QPoly& get(long n, long k) {
    while (static_cast<long>(rows_.size()) <= n) extend();
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

private:
  void extend() {
    std::size_t n = rows_.size();
    std::vector<QPoly> row(n + 1);
    if (n == 0) {
      row[0] = QPoly::constant(1);
    } else {
      const auto& prev = rows_[n - 1];
      for (std::size_t k = 1; k <= n; ++k) {
        QPoly value = prev[k - 1];
        if (k < n) value += times_q_int(prev[k], k);
        row[k] = std::move(value);
      }
    }
    rows_.push_back(std::move(row));
  }

  std::vector<std::vector<QPoly>> rows_;
};

void h_multisets(long remaining, std::size_t start, std::span<const QPoly> values,
                 const QPoly& product, QPoly& sum) {
  if (remaining == 0) {
    sum += product;
    return;
  }
  for (std::size_t i = start; i < values.size(); ++i) {
    h_multisets(remaining - 1, i, values, product * values[i], sum);
  }
}

}  // namespace

QPoly stirling_rec(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  thread_local StirlingTable table;
  return table.get(n, k);
}

QPoly stirling_enum(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  // Accumulate exponent counts, then build the polynomial once.
  std::vector<Integer> counts;
  for_each_rg(static_cast<std::size_t>(n), static_cast<int>(k), [&](const RGWord& w) {
    auto e = static_cast<std::size_t>(wt_exponent(w));
    if (counts.size() <= e) counts.resize(e + 1);
    counts[e] += 1;
  });
  return QPoly(std::move(counts));
}

QPoly h_complete(long d, std::span<const QPoly> values) {
  if (d < 0) return {};
  if (d == 0) return QPoly::constant(1);
  QPoly sum;
  h_multisets(d, 0, values, QPoly::constant(1), sum);
  return sum;
}

QPoly stirling_h(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  std::vector<QPoly> values;
  for (long i = 1; i <= k; ++i) values.push_back(q_int(i));
  return h_complete(n - k, values);
}

QPoly cofactor_determinant(const std::vector<std::vector<QPoly>>& matrix) {
  const std::size_t size = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != size) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (size == 0) return QPoly::constant(1);
  if (size == 1) return matrix[0][0];
  QPoly det;
  for (std::size_t col = 0; col < size; ++col) {
    if (matrix[0][col].is_zero()) continue;
    std::vector<std::vector<QPoly>> minor;
    minor.reserve(size - 1);
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<QPoly> row;
      row.reserve(size - 1);
      for (std::size_t c = 0; c < size; ++c) {
        if (c != col) row.push_back(matrix[r][c]);
      }
      minor.push_back(std::move(row));
    }
    QPoly term = matrix[0][col] * cofactor_determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

std::vector<std::vector<QPoly>> hankel_matrix(long n, long s) {
  if (n < 0 || s < 0) throw std::invalid_argument("hankel requires n, s >= 0");
  std::vector<std::vector<QPoly>> m(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) m[static_cast<std::size_t>(i)].push_back(stirling_rec(s + i + j, s + j));
  }
  return m;
}

QPoly hankel_det(long n, long s) { return cofactor_determinant(hankel_matrix(n, s)); }

QPoly hankel_rhs(long n, long s) {
  if (n < 0 || s < 0) throw std::invalid_argument("hankel requires n, s >= 0");
  QPoly product = QPoly::constant(1);
  for (long i = 0; i <= n; ++i) product *= q_int(s + i).pow(static_cast<std::size_t>(i));
  return product;
}

}  // namespace qstirl
