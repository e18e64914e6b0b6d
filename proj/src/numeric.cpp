#include "severi/numeric.hpp"

#include <cctype>

namespace severi {

BigCount factorial(unsigned long n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigCount multinomial(std::span<const long> parts) {
  BigCount r = 1;
  long total = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

BigCount exact_div(const BigCount& num, const BigCount& den, std::string_view what) {
  if (den == 0) throw InternalInconsistency(std::string(what) + ": division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InternalInconsistency(std::string(what) + ": " + to_decimal(num) + " is not divisible by " +
                                to_decimal(den));
  BigCount q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::string to_decimal(const BigCount& v) { return v.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("invalid rational '" + std::string(text) + "' (expected p or p/q)");
  BigCount n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("invalid rational '" + std::string(text) + "': zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

namespace {

std::optional<BigCount> integer_root(const BigCount& v, unsigned k) {
  if (v < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = integer_root(BigCount(-v), k);
    if (!r) return std::nullopt;
    return BigCount(-*r);
  }
  BigCount r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> rational_root(const Rational& q, unsigned k) {
  if (k == 0) throw std::invalid_argument("rational_root: k must be positive");
  auto n = integer_root(q.get_num(), k);
  auto d = integer_root(q.get_den(), k);
  if (!n || !d) return std::nullopt;
  Rational r(*n, *d);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned exp) {
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace severi
