// Sparse multivariate polynomials with integer coefficients.
//
// Terms live in a map keyed by exponent vectors aligned with the variable
// list, ordered graded-lexicographically with the leading term first. Binary
// operations merge the variable lists (left operand's order first), so
// polynomials built separately combine freely.
#pragma once

#include "severi/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace severi {

using Exponents = std::vector<int>;

/// Graded lex, larger first: total degree, then lexicographic.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponents, BigCount, GrlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, Terms terms);

  static MultiPoly constant(const BigCount& c, std::vector<std::string> vars = {});
  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Constant polynomial (possibly zero).
  bool is_constant() const;
  BigCount constant_term() const;
  int total_degree() const;

  /// Index of `name` in vars(), or -1.
  int index_of(const std::string& name) const;
  /// Highest power of `name` present; -1 for the zero polynomial, 0 if absent.
  int degree_in(const std::string& name) const;
  /// The coefficient of name^k, as a polynomial over the same variables.
  MultiPoly coefficient_in(const std::string& name, int k) const;
  MultiPoly derivative(const std::string& name) const;
  /// Replaces `name` by `value` everywhere.
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  /// Evaluates at rational values for every variable that occurs.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Same polynomial over `vars`, which must contain every variable in use.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;
  /// Drops variables that do not occur.
  MultiPoly compact() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const BigCount& s) const;
  MultiPoly pow(unsigned e) const;

  /// Exact quotient, or nullopt when `d` does not divide this polynomial.
  /// Throws std::domain_error when d is zero.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  /// Equal as polynomials, regardless of variable lists.
  bool operator==(const MultiPoly& o) const;

  /// Canonical text: leading term first, factors joined by '*', so the parser
  /// reads it back unchanged.
  std::string str() const;

 private:
  void add_term(const Exponents& e, const BigCount& c);
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Weighted degree shared by every monomial of f, or nullopt if they differ.
/// Every variable that occurs needs a weight (std::invalid_argument otherwise).
std::optional<int> quasi_degree(const MultiPoly& f, const std::map<std::string, int>& weights);

}  // namespace severi
