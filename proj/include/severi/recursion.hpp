// Generalized Severi degrees N^{d,delta}(alpha, beta) by the Caporaso-Harris
// recursion.
//
// A degree counts reduced plane curves of degree d with delta nodes meeting a
// fixed line L with contact orders alpha at assigned points of L and beta at
// unassigned points, through dimension-many general points of the plane.
#pragma once

#include "severi/numeric.hpp"
#include "severi/tally.hpp"

#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace severi {

/// Thrown when a key violates weight(alpha) + weight(beta) == d or d >= 1.
class InvalidKey : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SeveriKey {
  int d = 1;
  int delta = 0;
  Tally alpha;
  Tally beta;

  /// Throws InvalidKey if the key invariants do not hold.
  void validate() const;
  bool valid() const noexcept;

  bool operator==(const SeveriKey&) const = default;
  auto operator<=>(const SeveriKey&) const = default;

  /// e.g. "N^{4,3}([2],[2])"
  std::string str() const;
};

/// Validated construction.
SeveriKey make_key(int d, int delta, Tally alpha, Tally beta);

struct SeveriKeyHash {
  std::size_t operator()(const SeveriKey& k) const noexcept;
};

/// p_a(d) = (d-1)(d-2)/2
int arithmetic_genus(int d);

/// Largest node count a reduced degree-d curve can carry: d(d-1)/2.
int max_nodes(int d);

/// 2d + g - 1 + |beta| with g = p_a(d) - delta. May be negative.
int dimension(const SeveriKey& key);

/// Write-once memo table shared by the total and irreducible recursions.
///
/// Safe for concurrent callers: lookups take a shared lock, inserts an
/// exclusive one, and the first value written for a key wins.
class CountTable {
 public:
  std::optional<BigCount> find(const SeveriKey& key, bool irreducible) const;
  /// Stores `value` unless the key is already present; returns the stored value.
  BigCount insert(const SeveriKey& key, bool irreducible, const BigCount& value);
  std::size_t size() const;

  struct Entry {
    SeveriKey key;
    bool irreducible;
    BigCount value;
  };
  /// Snapshot of every entry, sorted by (irreducible, key).
  std::vector<Entry> entries() const;

 private:
  struct Slot {
    SeveriKey key;
    bool irreducible;
    bool operator==(const Slot&) const = default;
  };
  struct SlotHash {
    std::size_t operator()(const Slot& s) const noexcept {
      return SeveriKeyHash{}(s.key) * 2 + (s.irreducible ? 1 : 0);
    }
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Slot, BigCount, SlotHash> values_;
};

enum class TermOrigin { first_sum, second_sum };

/// One term coefficient * N(child) of the recursion.
struct Term {
  BigCount coefficient;
  SeveriKey child;
  TermOrigin origin;
  int k = 0;  // contact order moved from beta to alpha (first sum only)
};

/// The total count when it is fixed without recursing (delta out of range,
/// or d == 1); nullopt otherwise.
std::optional<BigCount> count_base_case(const SeveriKey& key);

/// The recursion terms of `key` with non-zero coefficient, first sum (by
/// increasing k) then second sum (alpha' ascending, beta' descending).
/// Children whose count is zero are kept. Requires d >= 2.
std::vector<Term> expand(const SeveriKey& key);

/// Drops terms whose child count is zero.
std::vector<Term> prune_zero(std::vector<Term> terms, CountTable& memo);

/// Evaluates the recursion at `key` given a source of child values.
BigCount evaluate_terms(const SeveriKey& key, const std::function<BigCount(const SeveriKey&)>& child_count);

/// N^{d,delta}(alpha, beta), memoized in `memo`. Throws InvalidKey.
BigCount count(const SeveriKey& key, CountTable& memo);

}  // namespace severi
