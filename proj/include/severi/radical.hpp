// Exact arithmetic in the field Q(theta), theta^n = c.
//
// A value stores its coordinates on the basis 1, theta, ..., theta^{n-1}.
// Plain rationals carry n = 1 and promote on contact with a radical, so the
// same code runs over Q and over Q(theta). Division requires x^n - c to be
// irreducible over Q (it is for c = 2, by Eisenstein).
#pragma once

#include "severi/numeric.hpp"
#include "severi/poly/unipoly.hpp"

#include <string>
#include <vector>

namespace severi {

class RadicalNumber {
 public:
  RadicalNumber() : RadicalNumber(0) {}
  RadicalNumber(int v) : RadicalNumber(Rational(v)) {}
  RadicalNumber(const Rational& v);

  /// theta^k in Q(theta), theta^n = c. Requires n >= 1, c != 0.
  static RadicalNumber radical_power(const Rational& c, int n, int k);

  int n() const { return static_cast<int>(coords_.size()); }
  const Rational& radicand() const { return c_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_rational() const;
  /// Throws std::domain_error when the value is not rational.
  Rational rational_value() const;

  RadicalNumber operator+(const RadicalNumber& o) const;
  RadicalNumber operator-(const RadicalNumber& o) const;
  RadicalNumber operator*(const RadicalNumber& o) const;
  /// Throws std::domain_error on division by zero.
  RadicalNumber operator/(const RadicalNumber& o) const;
  RadicalNumber inverse() const;
  bool operator==(const RadicalNumber& o) const;

  /// e.g. "3/4", "2^(1/3)", "-3*2^(2/3)", "1 + 2^(1/2)"
  std::string str() const;

 private:
  RadicalNumber(std::vector<Rational> coords, Rational c);
  /// Brings both operands into a common field; throws std::invalid_argument
  /// for two different radicals.
  static void unify(RadicalNumber& a, RadicalNumber& b);
  RadicalNumber promoted(int n, const Rational& c) const;

  std::vector<Rational> coords_;
  Rational c_ = 1;
};

CoeffText coeff_text(const RadicalNumber& v);

}  // namespace severi
