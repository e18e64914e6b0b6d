// Exact integer and rational helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace severi {

/// Arbitrary-precision non-negative integer used for every count and coefficient.
using BigCount = mpz_class;
using Rational = mpq_class;

/// Raised when an identity that must hold by construction fails (enumeration or
/// elimination bug). Never used for bad user input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigCount factorial(unsigned long n);

/// Binomial coefficient; zero outside 0 <= k <= n.
BigCount binomial(long n, long k);

/// (sum parts)! / prod parts!
BigCount multinomial(std::span<const long> parts);

/// Exact quotient; throws InternalInconsistency when the division leaves a remainder.
BigCount exact_div(const BigCount& num, const BigCount& den, std::string_view what);

std::string to_decimal(const BigCount& v);
std::string to_string(const Rational& q);

/// Parses `p`, `-p` or `p/q`. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// The rational r with r^k == q, if one exists.
std::optional<Rational> rational_root(const Rational& q, unsigned k);

Rational pow(const Rational& base, unsigned exp);

}  // namespace severi
