// Finitely supported sequences of non-negative integers and the combinatorial
// quantities built from them.
//
// A Tally stores entries t_k for k = origin, origin+1, ...; contact tallies use
// origin 1 (entry k counts order-k contacts), tacnode tallies use origin 2
// (entry m counts m-tacnodes). Trailing zeros are trimmed on construction, so
// equality, ordering and hashing all see the canonical form.
#pragma once

#include "severi/numeric.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace severi {

class Tally {
 public:
  Tally() = default;
  explicit Tally(std::vector<int> entries, int origin = 1);

  /// The sequence with a single 1 at index k.
  static Tally unit(int k, int origin = 1);

  int origin() const { return origin_; }
  /// Entry at index k; zero outside the stored range.
  int operator[](int k) const;
  /// One past the largest index with a non-zero entry (origin when empty).
  int end_index() const { return origin_ + static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// |t| = sum of entries.
  int norm() const;
  /// It = sum of k * t_k.
  int weight() const;

  Tally operator+(const Tally& other) const;
  /// Entrywise difference; throws std::domain_error if any entry would go negative.
  Tally operator-(const Tally& other) const;

  /// Entrywise comparison this <= other.
  bool below(const Tally& other) const;

  bool operator==(const Tally&) const = default;
  /// Lexicographic on (origin, entries); used only for deterministic ordering.
  std::strong_ordering operator<=>(const Tally& other) const;

  /// Bracketed text form, e.g. "[2,1]" or "[]".
  std::string str() const;

 private:
  void require_same_origin(const Tally& other) const;
  void trim();

  std::vector<int> entries_;
  int origin_ = 1;
};

struct TallyHash {
  std::size_t operator()(const Tally& t) const noexcept;
};

struct Measures {
  int norm;
  int weight;
};

Measures measures(const Tally& t);

/// I^t = prod k^{t_k}.
BigCount power(const Tally& t);

/// prod_k binom(hi_k, lo_k); rejects lo not below hi with std::domain_error.
BigCount choose(const Tally& hi, const Tally& lo);

/// prod_k multinomial(whole_k; parts_1k, ..., parts_nk); parts must sum to whole.
BigCount multinomial(const Tally& whole, std::span<const Tally> parts);

/// All canonical tallies of weight w that lie entrywise above `floor`, in
/// descending lexicographic order. Indices are bounded by w.
std::vector<Tally> enumerate_with_weight(int w, const Tally& floor = Tally());

/// Every tally t with t <= bound entrywise, descending lexicographic order.
std::vector<Tally> sub_tallies(const Tally& bound);

struct SheetProfile {
  BigCount mu;        // product of the orders
  long lambda;        // lcm of the orders
  BigCount kappa;     // mu / lambda: number of local branches
  long branch_mult;   // lambda / max order: multiplicity of each branch
};

/// Local branch structure for a curve carrying tacnodes of the given orders.
/// Throws std::invalid_argument for an empty list or any order < 2.
SheetProfile sheet_profile(std::span<const int> orders);

struct TacnodeMeasures {
  BigCount mu;  // prod m^{tau_m}
  int nu;       // sum (m - 1) tau_m
};

/// Requires a tally with origin 2 (entry m = number of m-tacnodes).
TacnodeMeasures mu_nu(const Tally& tau);

/// Parses `k` (meaning [k]) or `[n1,n2,...]`. Throws std::invalid_argument.
Tally parse_tally(std::string_view text, int origin = 1);

}  // namespace severi
