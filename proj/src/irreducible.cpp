#include "severi/irreducible.hpp"

#include <algorithm>

namespace severi {

std::string ComponentProfile::str() const {
  return "{d=" + std::to_string(d) + ",delta=" + std::to_string(delta) + ",alpha=" + alpha.str() +
         ",beta=" + beta.str() + ",gamma=" + gamma.str() + "}";
}

std::string Decomposition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += " + ";
    s += parts[i].str();
  }
  return s;
}

namespace {

// Every profile that could appear as one component for `key`: degree below d,
// irreducible genus >= 0, assigned contacts drawn from alpha, and a non-empty
// gamma whose complement in beta^l fits inside beta.
std::vector<ComponentProfile> candidate_profiles(const SeveriKey& key) {
  std::vector<ComponentProfile> out;
  const std::vector<Tally> alpha_subs = sub_tallies(key.alpha);
  for (int dl = 1; dl <= key.d - 1; ++dl) {
    for (const Tally& al : alpha_subs) {
      int rest = dl - al.weight();
      if (rest < 1) continue;  // gamma must be non-empty, so beta^l is too
      for (const Tally& bl : enumerate_with_weight(rest)) {
        for (const Tally& gl : sub_tallies(bl)) {
          if (gl.empty()) continue;
          if (!(bl - gl).below(key.beta)) continue;
          for (int dt = 0; dt <= arithmetic_genus(dl); ++dt) out.push_back({dl, dt, al, bl, gl});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Search {
  const SeveriKey& key;
  const std::vector<ComponentProfile>& profiles;
  std::vector<Decomposition>& out;
  std::vector<std::size_t> chosen;

  void run(std::size_t start, int degree_left, const Tally& alpha_used, const Tally& residual_used) {
    if (degree_left == 0) {
      emit(alpha_used, residual_used);
      return;
    }
    for (std::size_t i = start; i < profiles.size(); ++i) {
      const ComponentProfile& p = profiles[i];
      if (p.d > degree_left) break;  // sorted by degree first
      Tally a = alpha_used + p.alpha;
      if (!a.below(key.alpha)) continue;
      Tally r = residual_used + (p.beta - p.gamma);
      if (!r.below(key.beta)) continue;
      chosen.push_back(i);
      run(i, degree_left - p.d, a, r);
      chosen.pop_back();
    }
  }

  void emit(const Tally& alpha_used, const Tally& residual_used) {
    if (residual_used != key.beta) return;
    long sum_delta = 0, sum_d = 0, sum_d2 = 0, gained = 0;
    Tally beta_prime;
    for (std::size_t i : chosen) {
      const ComponentProfile& p = profiles[i];
      sum_delta += p.delta;
      sum_d += p.d;
      sum_d2 += static_cast<long>(p.d) * p.d;
      gained += p.gamma.norm();
      beta_prime = beta_prime + p.beta;
    }
    long cross = (sum_d * sum_d - sum_d2) / 2;  // sum_{h<l} d_h d_l
    if (sum_delta != key.delta + gained - key.d + 1 - cross) return;

    Decomposition dec;
    dec.alpha_prime = alpha_used;
    dec.beta_prime = beta_prime;
    dec.sigma = 1;
    std::size_t run_length = 0;
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      dec.parts.push_back(profiles[chosen[j]]);
      run_length = (j > 0 && chosen[j] == chosen[j - 1]) ? run_length + 1 : 1;
      dec.sigma *= static_cast<unsigned long>(run_length);
    }
    out.push_back(std::move(dec));
  }
};

}  // namespace

std::vector<Decomposition> decompositions(const SeveriKey& key) {
  key.validate();
  if (key.d < 2) throw std::invalid_argument("decompositions: " + key.str() + " is a base case");
  const std::vector<ComponentProfile> profiles = candidate_profiles(key);
  std::vector<Decomposition> out;
  Search search{key, profiles, out, {}};
  search.run(0, key.d - 1, Tally(), Tally());

  const int dim = dimension(key);
  for (const Decomposition& dec : out) {
    int total = 0;
    for (const ComponentProfile& p : dec.parts) total += dimension(p.key());
    if (total != dim - 1)
      throw InternalInconsistency("decompositions: dimensions of " + dec.str() + " sum to " + std::to_string(total) +
                                  ", expected " + std::to_string(dim - 1) + " for " + key.str());
  }
  return out;
}

BigCount decomposition_coefficient(const SeveriKey& key, const Decomposition& dec) {
  std::vector<long> dims;
  std::vector<Tally> alpha_parts;
  BigCount rest = 1;
  long dim_sum = 0;
  for (const ComponentProfile& p : dec.parts) {
    dims.push_back(dimension(p.key()));
    dim_sum += dims.back();
    alpha_parts.push_back(p.alpha);
    rest *= choose(p.beta, p.beta - p.gamma) * power(p.gamma);
  }
  if (dim_sum != dimension(key) - 1)
    throw InternalInconsistency("decomposition_coefficient: dimension bookkeeping fails for " + dec.str());
  alpha_parts.push_back(key.alpha - dec.alpha_prime);
  BigCount numerator = multinomial(std::span<const long>(dims)) * multinomial(key.alpha, alpha_parts) * rest;
  return exact_div(numerator, dec.sigma, "sigma division for " + dec.str());
}

std::vector<IrrTerm> expand_irr(const SeveriKey& key) {
  key.validate();
  if (key.d < 2) throw std::invalid_argument("expand_irr: " + key.str() + " is a base case");
  std::vector<IrrTerm> terms;
  for (int k = 1; k < key.beta.end_index(); ++k) {
    if (key.beta[k] == 0) continue;
    Tally e = Tally::unit(k);
    terms.push_back({BigCount(k), {SeveriKey{key.d, key.delta, key.alpha + e, key.beta - e}}, TermOrigin::first_sum, k});
  }
  for (const Decomposition& dec : decompositions(key)) {
    IrrTerm t{decomposition_coefficient(key, dec), {}, TermOrigin::second_sum, 0};
    for (const ComponentProfile& p : dec.parts) t.children.push_back(p.key());
    terms.push_back(std::move(t));
  }
  return terms;
}

std::optional<BigCount> count_irr_base_case(const SeveriKey& key) {
  if (key.delta < 0 || key.delta > arithmetic_genus(key.d)) return BigCount(0);
  if (key.d == 1) return BigCount(key.delta == 0 ? 1 : 0);
  return std::nullopt;
}

BigCount evaluate_irr_terms(const SeveriKey& key,
                            const std::function<BigCount(const SeveriKey&)>& child_count_irr) {
  if (auto base = count_irr_base_case(key)) return *base;
  BigCount total = 0;
  for (const IrrTerm& t : expand_irr(key)) {
    BigCount product = t.coefficient;
    for (const SeveriKey& child : t.children) {
      if (product == 0) break;
      product *= child_count_irr(child);
    }
    total += product;
  }
  return total;
}

BigCount count_irr(const SeveriKey& key, CountTable& memo) {
  key.validate();
  if (auto base = count_irr_base_case(key)) return *base;
  if (auto hit = memo.find(key, true)) return *hit;
  BigCount value = evaluate_irr_terms(key, [&memo](const SeveriKey& child) { return count_irr(child, memo); });
  return memo.insert(key, true, value);
}

BigCount product_degree(std::span<const ComponentDegree> components, const BigCount& sigma) {
  std::vector<long> dims;
  BigCount product = 1;
  for (const ComponentDegree& c : components) {
    if (c.dim < 0) throw std::invalid_argument("product_degree: negative dimension");
    dims.push_back(c.dim);
    product *= c.deg;
  }
  return exact_div(multinomial(std::span<const long>(dims)) * product, sigma, "product_degree");
}

}  // namespace severi
