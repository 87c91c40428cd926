#include "qstirl/qpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace qstirl {

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly QPoly::constant(const Integer& c) { return QPoly(std::vector<Integer>{c}); }

QPoly QPoly::monomial(std::size_t exponent, const Integer& c) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return QPoly(std::move(v));
}

Integer QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly operator-(QPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPoly QPoly::shifted(std::size_t e) const {
  if (is_zero()) return {};
  std::vector<Integer> v(e);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Integer& c) const {
  std::vector<Integer> v = coeffs_;
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

QPoly QPoly::pow(std::size_t e) const {
  QPoly result = constant(1);
  QPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Integer QPoly::eval(const Integer& q0) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Integer& c = cs[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }

}  // namespace qstirl
