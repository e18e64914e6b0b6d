// Irreducible-curve Severi degrees N_irr^{d,delta}(alpha, beta).
//
// The second sum of the irreducible recursion runs over ways of writing the
// residual curve (after splitting off L) as a union of irreducible components
// C_1 + ... + C_k, each with its own contact data, where gamma^l records the
// unassigned contacts of C_l that merge with L into a single branch. Every
// component must have at least one such contact, otherwise the deformed curve
// stays reducible.
#pragma once

#include "severi/recursion.hpp"

#include <span>
#include <vector>

namespace severi {

struct ComponentProfile {
  int d = 1;
  int delta = 0;
  Tally alpha;
  Tally beta;
  Tally gamma;

  SeveriKey key() const { return SeveriKey{d, delta, alpha, beta}; }

  bool operator==(const ComponentProfile&) const = default;
  /// Lexicographic on (d, delta, alpha, beta, gamma).
  auto operator<=>(const ComponentProfile&) const = default;

  std::string str() const;
};

struct Decomposition {
  /// Non-decreasing in ComponentProfile order.
  std::vector<ComponentProfile> parts;
  Tally alpha_prime;  // sum of alpha^l
  Tally beta_prime;   // sum of beta^l
  /// Product of factorials of the multiplicities of identical profiles.
  BigCount sigma;

  std::string str() const;
};

/// Every decomposition contributing to the second sum for `key`, each multiset
/// exactly once, in lexicographic order of the sorted part lists.
/// Requires d >= 2. Throws InvalidKey.
std::vector<Decomposition> decompositions(const SeveriKey& key);

/// Coefficient of prod_l N_irr(part_l) in the recursion:
/// (1/sigma) multinomial(n_1..n_k) multinomial(alpha; alpha^1..alpha^k, alpha - alpha')
///   prod binom(beta^l, gamma^l) prod I^{gamma^l},  with n_l = dimension(part_l).
/// Asserts sum n_l = dimension(key) - 1 and exactness of the sigma division.
BigCount decomposition_coefficient(const SeveriKey& key, const Decomposition& dec);

struct IrrTerm {
  BigCount coefficient;
  std::vector<SeveriKey> children;  // product of their irreducible counts
  TermOrigin origin;
  int k = 0;
};

/// All terms of the irreducible recursion at `key` (d >= 2).
std::vector<IrrTerm> expand_irr(const SeveriKey& key);

/// N_irr when fixed without recursion (delta out of [0, p_a(d)], or d == 1).
std::optional<BigCount> count_irr_base_case(const SeveriKey& key);

BigCount evaluate_irr_terms(const SeveriKey& key,
                            const std::function<BigCount(const SeveriKey&)>& child_count_irr);

/// N_irr^{d,delta}(alpha, beta), memoized in `memo` under the irreducible flag.
BigCount count_irr(const SeveriKey& key, CountTable& memo);

struct ComponentDegree {
  long dim;
  BigCount deg;
};

/// Degree of the image of a product of varieties under the Segre-type map:
/// (1/sigma) multinomial(sum dim; dims) prod deg. Throws InternalInconsistency
/// when sigma does not divide exactly.
BigCount product_degree(std::span<const ComponentDegree> components, const BigCount& sigma);

}  // namespace severi
