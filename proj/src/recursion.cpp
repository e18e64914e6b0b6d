#include "severi/recursion.hpp"

#include <algorithm>
#include <mutex>

namespace severi {

void SeveriKey::validate() const {
  if (d < 1) throw InvalidKey("invalid key " + str() + ": degree must be >= 1");
  if (alpha.origin() != 1 || beta.origin() != 1)
    throw InvalidKey("invalid key " + str() + ": contact tallies start at order 1");
  if (alpha.weight() + beta.weight() != d)
    throw InvalidKey("invalid key " + str() + ": weight(alpha) + weight(beta) = " +
                     std::to_string(alpha.weight() + beta.weight()) + " != d = " + std::to_string(d));
}

bool SeveriKey::valid() const noexcept {
  return d >= 1 && alpha.origin() == 1 && beta.origin() == 1 && alpha.weight() + beta.weight() == d;
}

std::string SeveriKey::str() const {
  return "N^{" + std::to_string(d) + "," + std::to_string(delta) + "}(" + alpha.str() + "," + beta.str() + ")";
}

SeveriKey make_key(int d, int delta, Tally alpha, Tally beta) {
  SeveriKey k{d, delta, std::move(alpha), std::move(beta)};
  k.validate();
  return k;
}

std::size_t SeveriKeyHash::operator()(const SeveriKey& k) const noexcept {
  TallyHash th;
  std::size_t h = static_cast<std::size_t>(k.d) * 1000003u + static_cast<std::size_t>(k.delta + 1024);
  h = h * 0x9e3779b97f4a7c15ULL ^ th(k.alpha);
  h = h * 0x9e3779b97f4a7c15ULL ^ th(k.beta);
  return h;
}

int arithmetic_genus(int d) { return (d - 1) * (d - 2) / 2; }

int max_nodes(int d) { return d * (d - 1) / 2; }

int dimension(const SeveriKey& key) {
  return 2 * key.d + (arithmetic_genus(key.d) - key.delta) - 1 + key.beta.norm();
}

std::optional<BigCount> CountTable::find(const SeveriKey& key, bool irreducible) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(Slot{key, irreducible});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

BigCount CountTable::insert(const SeveriKey& key, bool irreducible, const BigCount& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = values_.try_emplace(Slot{key, irreducible}, value);
  return it->second;
}

std::size_t CountTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

std::vector<CountTable::Entry> CountTable::entries() const {
  std::vector<Entry> out;
  {
    std::shared_lock lock(mutex_);
    out.reserve(values_.size());
    for (const auto& [slot, value] : values_) out.push_back({slot.key, slot.irreducible, value});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    if (a.irreducible != b.irreducible) return !a.irreducible;
    return a.key < b.key;
  });
  return out;
}

std::optional<BigCount> count_base_case(const SeveriKey& key) {
  if (key.delta < 0 || key.delta > max_nodes(key.d)) return BigCount(0);
  if (key.d == 1) return BigCount(key.delta == 0 ? 1 : 0);
  return std::nullopt;
}

std::vector<Term> expand(const SeveriKey& key) {
  key.validate();
  if (key.d < 2) throw std::invalid_argument("expand: " + key.str() + " is a base case");
  std::vector<Term> terms;

  for (int k = 1; k < key.beta.end_index(); ++k) {
    if (key.beta[k] == 0) continue;
    Tally e = Tally::unit(k);
    terms.push_back({BigCount(k), SeveriKey{key.d, key.delta, key.alpha + e, key.beta - e}, TermOrigin::first_sum, k});
  }

  // Second sum: alpha' <= alpha, beta' >= beta, I alpha' + I beta' = d - 1.
  const int target = key.d - 1;
  const std::vector<Tally> alpha_subs = sub_tallies(key.alpha);
  for (auto it = alpha_subs.rbegin(); it != alpha_subs.rend(); ++it) {
    const Tally& alpha_sub = *it;
    int rest = target - alpha_sub.weight();
    if (rest < 0) continue;
    for (const Tally& beta_sup : enumerate_with_weight(rest, key.beta)) {
      Tally gained = beta_sup - key.beta;
      BigCount coeff = power(gained) * choose(beta_sup, key.beta) * choose(key.alpha, alpha_sub);
      if (coeff == 0) continue;
      int child_delta = key.delta + gained.norm() - key.d + 1;
      terms.push_back({coeff, SeveriKey{target, child_delta, alpha_sub, beta_sup}, TermOrigin::second_sum, 0});
    }
  }

  const int dim = dimension(key);
  for (const Term& t : terms)
    if (dimension(t.child) != dim - 1)
      throw InternalInconsistency("expand: child " + t.child.str() + " of " + key.str() +
                                  " does not have codimension one");
  return terms;
}

std::vector<Term> prune_zero(std::vector<Term> terms, CountTable& memo) {
  std::erase_if(terms, [&](const Term& t) { return count(t.child, memo) == 0; });
  return terms;
}

BigCount evaluate_terms(const SeveriKey& key, const std::function<BigCount(const SeveriKey&)>& child_count) {
  if (auto base = count_base_case(key)) return *base;
  BigCount total = 0;
  for (const Term& t : expand(key)) total += t.coefficient * child_count(t.child);
  return total;
}

BigCount count(const SeveriKey& key, CountTable& memo) {
  key.validate();
  if (auto base = count_base_case(key)) return *base;
  if (auto hit = memo.find(key, false)) return *hit;
  BigCount value = evaluate_terms(key, [&memo](const SeveriKey& child) { return count(child, memo); });
  return memo.insert(key, false, value);
}

}  // namespace severi
