#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qstirl {

using Integer = mpz_class;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
///
/// Index i of coefficients() is the coefficient of q^i. The representation is
/// kept normalized: the highest stored coefficient is nonzero and the zero
/// polynomial stores nothing, so operator== is structural equality.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const Integer& c);
  static QPoly monomial(std::size_t exponent, const Integer& c = 1);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of q^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator-(QPoly p);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Multiplies by q^e.
  QPoly shifted(std::size_t e) const;
  QPoly scaled(const Integer& c) const;
  QPoly pow(std::size_t e) const;

  /// Substitutes an integer for q.
  Integer eval(const Integer& q0) const;

private:
  void normalize();

  std::vector<Integer> coeffs_;
};

inline Integer evaluate(const QPoly& p, const Integer& q0) { return p.eval(q0); }

/// Ascending powers with explicit signs and unit coefficients elided on
/// nonconstant terms: "2 + q + 3*q^2", "1 - q", "0".
std::string to_string(const QPoly& p);
std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace qstirl
