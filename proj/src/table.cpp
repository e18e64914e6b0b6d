#include "severi/table.hpp"

#include "severi/irreducible.hpp"

#include <algorithm>
#include <exception>
#include <map>

namespace severi {

std::vector<SeveriKey> all_keys(int d, bool irreducible) {
  if (d < 1) throw std::invalid_argument("all_keys: degree must be >= 1");
  std::vector<SeveriKey> out;
  const int top = irreducible ? arithmetic_genus(d) : max_nodes(d);
  for (int wa = 0; wa <= d; ++wa)
    for (const Tally& a : enumerate_with_weight(wa))
      for (const Tally& b : enumerate_with_weight(d - wa))
        for (int delta = 0; delta <= top; ++delta) out.push_back(SeveriKey{d, delta, a, b});
  std::sort(out.begin(), out.end());
  return out;
}

void build_table_serial(int max_d, bool irreducible, CountTable& table) {
  for (int d = 1; d <= max_d; ++d)
    for (const SeveriKey& key : all_keys(d, irreducible)) {
      if (irreducible)
        table.insert(key, true, count_irr(key, table));
      else
        table.insert(key, false, count(key, table));
    }
}

void build_table_parallel(int max_d, bool irreducible, CountTable& table) {
  auto lookup = [&table, irreducible](const SeveriKey& child) -> BigCount {
    auto base = irreducible ? count_irr_base_case(child) : count_base_case(child);
    if (base) return *base;
    if (auto hit = table.find(child, irreducible)) return *hit;
    throw InternalInconsistency("build_table_parallel: " + child.str() + " requested before its level");
  };

  for (int d = 1; d <= max_d; ++d) {
    std::map<int, std::vector<SeveriKey>> levels;
    for (SeveriKey& key : all_keys(d, irreducible)) levels[key.beta.weight()].push_back(std::move(key));

    for (const auto& [weight, keys] : levels) {
      const long n = static_cast<long>(keys.size());
      std::vector<BigCount> values(keys.size());
      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < n; ++i) {
        try {
          const SeveriKey& key = keys[static_cast<std::size_t>(i)];
          values[static_cast<std::size_t>(i)] =
              irreducible ? evaluate_irr_terms(key, lookup) : evaluate_terms(key, lookup);
        } catch (...) {
#pragma omp critical(severi_table_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
      for (std::size_t i = 0; i < keys.size(); ++i) table.insert(keys[i], irreducible, values[i]);
    }
  }
}

}  // namespace severi
