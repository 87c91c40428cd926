#include "qstirl/qseries.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qstirl {

QSeries::QSeries(std::size_t order) : order_(order), coeffs_(order + 1) {}

QSeries::QSeries(std::size_t order, std::vector<QPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_ + 1);
}

QSeries QSeries::one(std::size_t order) {
  QSeries s(order);
  s.coeffs_[0] = QPoly::constant(1);
  return s;
}

QSeries QSeries::geometric(const QPoly& c, std::size_t order) {
  QSeries s(order);
  QPoly power = QPoly::constant(1);
  for (std::size_t m = 0; m <= order; ++m) {
    s.coeffs_[m] = power;
    power *= c;
  }
  return s;
}

const QPoly& QSeries::coeff(std::size_t m) const {
  if (m > order_) {
    throw std::out_of_range("series coefficient " + std::to_string(m) +
                            " beyond truncation order " + std::to_string(order_));
  }
  return coeffs_[m];
}

void QSeries::set_coeff(std::size_t m, QPoly value) {
  if (m > order_) {
    throw std::out_of_range("series coefficient " + std::to_string(m) +
                            " beyond truncation order " + std::to_string(order_));
  }
  coeffs_[m] = std::move(value);
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  if (rhs.order_ != order_) throw std::invalid_argument("series order mismatch in addition");
  for (std::size_t m = 0; m <= order_; ++m) coeffs_[m] += rhs.coeffs_[m];
  return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
  if (lhs.order_ != rhs.order_) {
    throw std::invalid_argument("series order mismatch in multiplication");
  }
  QSeries out(lhs.order_);
  for (std::size_t i = 0; i <= lhs.order_; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= lhs.order_; ++j) {
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

QSeries QSeries::shifted(std::size_t k) const {
  QSeries out(order_);
  for (std::size_t m = 0; m + k <= order_; ++m) out.coeffs_[m + k] = coeffs_[m];
  return out;
}

QSeries QSeries::scaled(const QPoly& c) const {
  QSeries out(order_);
  for (std::size_t m = 0; m <= order_; ++m) out.coeffs_[m] = coeffs_[m] * c;
  return out;
}

std::string to_string(const QSeries& s, char variable) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t m = 0; m <= s.order(); ++m) {
    const QPoly& c = s.coefficients()[m];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(c) << ')';
    if (m >= 1) os << '*' << variable;
    if (m >= 2) os << '^' << m;
  }
  if (first) os << '0';
  os << " + O(" << variable << '^' << s.order() + 1 << ')';
  return os.str();
}

}  // namespace qstirl
