#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qstirl/qpoly.hpp"

namespace qstirl {

/// Power series in a second variable (t or x) truncated at a fixed order N,
/// with QPoly coefficients. Index m holds the coefficient of the m-th power;
/// anything beyond N is discarded by every operation.
class QSeries {
public:
  explicit QSeries(std::size_t order);
  /// Pads or truncates coeffs to order + 1 entries.
  QSeries(std::size_t order, std::vector<QPoly> coeffs);

  static QSeries one(std::size_t order);
  /// Truncation of 1 / (1 - c*t): the m-th coefficient is c^m.
  static QSeries geometric(const QPoly& c, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  const std::vector<QPoly>& coefficients() const noexcept { return coeffs_; }

  /// Throws std::out_of_range when m > order().
  const QPoly& coeff(std::size_t m) const;
  void set_coeff(std::size_t m, QPoly value);

  QSeries& operator+=(const QSeries& rhs);
  friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
  /// Operands must share the truncation order (std::invalid_argument otherwise).
  friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);
  friend bool operator==(const QSeries&, const QSeries&) = default;

  /// Multiplies by (series variable)^k, dropping terms past the order.
  QSeries shifted(std::size_t k) const;
  QSeries scaled(const QPoly& c) const;

private:
  std::size_t order_;
  std::vector<QPoly> coeffs_;
};

inline QSeries series_geom(const QPoly& c, std::size_t order) {
  return QSeries::geometric(c, order);
}

std::string to_string(const QSeries& s, char variable = 't');

}  // namespace qstirl
