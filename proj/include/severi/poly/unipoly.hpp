// Dense univariate polynomials over an exact field.
//
// F is Rational (mpq_class) or RadicalNumber. It must be constructible from
// int and support + - * / and ==. Text output needs an overload
// coeff_text(const F&) visible here or by argument-dependent lookup.
#pragma once

#include "severi/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace severi {

template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  /// Coefficients lowest degree first.
  explicit UniPoly(std::vector<F> coeffs, std::string var = "x") : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static UniPoly constant(const F& v, std::string var = "x") { return UniPoly(std::vector<F>{v}, std::move(var)); }
  /// c * var^k
  static UniPoly monomial(const F& c, int k, std::string var = "x") {
    std::vector<F> e(static_cast<std::size_t>(k) + 1, F(0));
    e.back() = c;
    return UniPoly(std::move(e), std::move(var));
  }

  const std::string& var() const { return var_; }
  const std::vector<F>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  F operator[](int k) const {
    if (k < 0 || k > degree()) return F(0);
    return c_[static_cast<std::size_t>(k)];
  }
  F lc() const { return c_.empty() ? F(0) : c_.back(); }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(std::move(r), var_);
  }
  UniPoly operator-() const {
    std::vector<F> r;
    for (const F& v : c_) r.push_back(F(0) - v);
    return UniPoly(std::move(r), var_);
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly({}, var_);
    std::vector<F> r(c_.size() + o.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UniPoly(std::move(r), var_);
  }
  UniPoly scaled(const F& s) const {
    std::vector<F> r;
    for (const F& v : c_) r.push_back(v * s);
    return UniPoly(std::move(r), var_);
  }
  UniPoly pow(unsigned e) const {
    UniPoly r = constant(F(1), var_), b = *this;
    for (; e; e >>= 1, b = b * b)
      if (e & 1) r = r * b;
    return r;
  }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> rem = c_;
    int dd = d.degree();
    std::vector<F> q(static_cast<std::size_t>(std::max(degree() - dd + 1, 0)), F(0));
    const F inv_lc = F(1) / d.lc();
    for (int k = degree(); k >= dd; --k) {
      F f = rem[static_cast<std::size_t>(k)] * inv_lc;
      q[static_cast<std::size_t>(k - dd)] = f;
      if (f == F(0)) continue;
      for (int j = 0; j <= dd; ++j) {
        auto& slot = rem[static_cast<std::size_t>(k - dd + j)];
        slot = slot - f * d.c_[static_cast<std::size_t>(j)];
      }
    }
    rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
    return {UniPoly(std::move(q), var_), UniPoly(std::move(rem), var_)};
  }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

  UniPoly derivative() const {
    std::vector<F> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * F(static_cast<int>(i)));
    return UniPoly(std::move(r), var_);
  }

  UniPoly monic() const { return is_zero() ? *this : scaled(F(1) / lc()); }

  F eval(const F& x) const {
    F r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  /// p(s * x)
  UniPoly rescaled(const F& s) const {
    std::vector<F> r;
    F p(1);
    for (const F& v : c_) {
      r.push_back(v * p);
      p = p * s;
    }
    return UniPoly(std::move(r), var_);
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  /// e.g. "8x^4 - 8x^2 + 1", "x^3 - (3/4)x".
  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }

  std::vector<F> c_;
  std::string var_ = "x";
};

/// Printing pieces of one coefficient: its sign and the text of its absolute
/// value, parenthesized when it is not a plain integer.
struct CoeffText {
  bool negative = false;
  bool one = false;
  std::string magnitude;
};

inline CoeffText coeff_text(const Rational& q) {
  CoeffText t;
  t.negative = sgn(q) < 0;
  Rational a = abs(q);
  t.one = a == 1;
  t.magnitude = a.get_den() == 1 ? a.get_num().get_str() : "(" + a.get_str() + ")";
  return t;
}

template <class F>
std::string UniPoly<F>::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const F& v = c_[static_cast<std::size_t>(k)];
    if (v == F(0)) continue;
    CoeffText t = coeff_text(v);
    if (s.empty())
      s += t.negative ? "-" : "";
    else
      s += t.negative ? " - " : " + ";
    if (k == 0 || !t.one) s += t.magnitude;
    if (k >= 1) s += var_;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    UniPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct SquarefreePart {
  int multiplicity;
  int degree;  // degree of the product of the roots with this multiplicity
  bool operator==(const SquarefreePart&) const = default;
};

/// Yun's square-free decomposition, reported as (multiplicity, degree) pairs in
/// increasing multiplicity. Throws std::invalid_argument on the zero polynomial.
template <class F>
std::vector<SquarefreePart> squarefree_profile(const UniPoly<F>& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_profile: zero polynomial");
  std::vector<SquarefreePart> out;
  if (f.degree() == 0) return out;
  UniPoly<F> fp = f.derivative();
  UniPoly<F> a = gcd(f, fp);
  UniPoly<F> b = f / a;
  UniPoly<F> c = fp / a;
  UniPoly<F> d = c - b.derivative();
  int total = 0;
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) {
      out.push_back({i, a.degree()});
      total += i * a.degree();
    }
  }
  if (total != f.degree())
    throw InternalInconsistency("squarefree_profile: multiplicities do not add up to the degree");
  return out;
}

}  // namespace severi
