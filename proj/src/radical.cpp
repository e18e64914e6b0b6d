#include "severi/radical.hpp"

#include <stdexcept>

namespace severi {

RadicalNumber::RadicalNumber(const Rational& v) : coords_{v}, c_(1) {}

RadicalNumber::RadicalNumber(std::vector<Rational> coords, Rational c) : coords_(std::move(coords)), c_(std::move(c)) {}

RadicalNumber RadicalNumber::radical_power(const Rational& c, int n, int k) {
  if (n < 1 || c == 0) throw std::invalid_argument("radical_power: need n >= 1 and a non-zero radicand");
  if (k < 0) return radical_power(c, n, -k).inverse();
  std::vector<Rational> coords(static_cast<std::size_t>(n), Rational(0));
  coords[static_cast<std::size_t>(k % n)] = pow(c, static_cast<unsigned>(k / n));
  return RadicalNumber(std::move(coords), n == 1 ? Rational(1) : c);
}

bool RadicalNumber::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational RadicalNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error(str() + " is not rational");
  return coords_[0];
}

RadicalNumber RadicalNumber::promoted(int n, const Rational& c) const {
  std::vector<Rational> coords(static_cast<std::size_t>(n), Rational(0));
  coords[0] = coords_[0];
  return RadicalNumber(std::move(coords), c);
}

void RadicalNumber::unify(RadicalNumber& a, RadicalNumber& b) {
  if (a.n() == b.n() && (a.n() == 1 || a.c_ == b.c_)) return;
  if (a.n() == 1) {
    a = a.promoted(b.n(), b.c_);
    return;
  }
  if (b.n() == 1) {
    b = b.promoted(a.n(), a.c_);
    return;
  }
  throw std::invalid_argument("cannot combine numbers from different radical fields");
}

RadicalNumber RadicalNumber::operator+(const RadicalNumber& o) const {
  RadicalNumber a = *this, b = o;
  unify(a, b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
  return a;
}

RadicalNumber RadicalNumber::operator-(const RadicalNumber& o) const {
  RadicalNumber a = *this, b = o;
  unify(a, b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] -= b.coords_[i];
  return a;
}

RadicalNumber RadicalNumber::operator*(const RadicalNumber& o) const {
  RadicalNumber a = *this, b = o;
  unify(a, b);
  const std::size_t n = a.coords_.size();
  std::vector<Rational> r(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coords_[j] == 0) continue;
      Rational p = a.coords_[i] * b.coords_[j];
      if (i + j >= n)
        r[i + j - n] += p * a.c_;
      else
        r[i + j] += p;
    }
  }
  return RadicalNumber(std::move(r), a.c_);
}

RadicalNumber RadicalNumber::inverse() const {
  const std::size_t n = coords_.size();
  // Column j of the matrix holds the coordinates of this * theta^j; solve M x = e_0.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  RadicalNumber col = *this;
  RadicalNumber theta = n == 1 ? RadicalNumber(1) : radical_power(c_, static_cast<int>(n), 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords_[i];
    col = col * theta;
  }
  m[0][n] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw std::domain_error("division by zero in " + std::string(n == 1 ? "Q" : "a radical field"));
    std::swap(m[k], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return RadicalNumber(std::move(x), c_);
}

RadicalNumber RadicalNumber::operator/(const RadicalNumber& o) const {
  RadicalNumber a = *this, b = o;
  unify(a, b);
  return a * b.inverse();
}

bool RadicalNumber::operator==(const RadicalNumber& o) const {
  RadicalNumber a = *this, b = o;
  unify(a, b);
  return a.coords_ == b.coords_;
}

namespace {

std::string radical_text(const Rational& c, int n, int k) {
  std::string base = c.get_den() == 1 ? c.get_str() : "(" + c.get_str() + ")";
  return base + "^(" + Rational(k, n).get_str() + ")";
}

}  // namespace

std::string RadicalNumber::str() const {
  std::string s;
  const int n = this->n();
  for (int k = 0; k < n; ++k) {
    const Rational& q = coords_[static_cast<std::size_t>(k)];
    if (q == 0) continue;
    bool neg = q < 0;
    Rational a = abs(q);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (k == 0)
      s += a.get_str();
    else if (a == 1)
      s += radical_text(c_, n, k);
    else
      s += a.get_str() + "*" + radical_text(c_, n, k);
  }
  return s.empty() ? "0" : s;
}

CoeffText coeff_text(const RadicalNumber& v) {
  if (v.is_rational()) return coeff_text(v.rational_value());
  int nonzero = 0;
  for (const Rational& q : v.coords()) nonzero += q != 0;
  CoeffText t;
  RadicalNumber a = v;
  if (nonzero == 1) {
    for (const Rational& q : v.coords())
      if (q < 0) t.negative = true;
    if (t.negative) a = RadicalNumber(0) - v;
  }
  t.magnitude = "(" + a.str() + ")";
  return t;
}

}  // namespace severi
