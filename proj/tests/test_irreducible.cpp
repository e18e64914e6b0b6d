#include "oracles.hpp"

#include "severi/irreducible.hpp"
#include "severi/table.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace severi;

namespace {

BigCount Nirr(int d, int delta, const char* a, const char* b) {
  CountTable memo;
  return count_irr(make_key(d, delta, parse_tally(a), parse_tally(b)), memo);
}

// Tallies with weight exactly w, by brute force over bounded vectors.
std::vector<Tally> tallies_of_weight(int w) {
  std::vector<Tally> out;
  std::vector<int> v(static_cast<std::size_t>(w), 0);
  for (;;) {
    Tally t(v);
    if (t.weight() == w && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    std::size_t i = 0;
    while (i < v.size() && v[i] == w) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
  }
  if (w == 0) out = {Tally()};
  return out;
}

std::vector<Tally> tallies_below(const Tally& bound) {
  std::vector<Tally> out{Tally()};
  for (int k = 1; k < bound.end_index(); ++k) {
    std::vector<Tally> next;
    for (const Tally& t : out)
      for (int c = 0; c <= bound[k]; ++c) {
        std::vector<int> e = t.entries();
        e.resize(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(k - 1)] = c;
        next.emplace_back(e);
      }
    out = std::move(next);
  }
  return out;
}

struct BruteResult {
  std::set<std::vector<ComponentProfile>> multisets;
  std::map<std::vector<ComponentProfile>, long> orderings;
};

// Every ordered tuple of admissible profiles meeting the decomposition
// constraints, collected as sorted multisets.
BruteResult brute_decompositions(const SeveriKey& key) {
  std::vector<ComponentProfile> grid;
  for (int dl = 1; dl < key.d; ++dl)
    for (int wa = 0; wa <= dl; ++wa)
      for (const Tally& al : tallies_of_weight(wa))
        for (const Tally& bl : tallies_of_weight(dl - wa))
          for (const Tally& gl : tallies_below(bl))
            for (int dt = 0; dt <= (dl - 1) * (dl - 2) / 2; ++dt)
              if (!gl.empty()) grid.push_back({dl, dt, al, bl, gl});

  BruteResult r;
  std::vector<ComponentProfile> tuple;
  std::function<void(int)> rec = [&](int degree_left) {
    if (degree_left == 0) {
      Tally a, residual;
      long sum_delta = 0, gained = 0, cross = 0;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        a = a + tuple[i].alpha;
        residual = residual + (tuple[i].beta - tuple[i].gamma);
        sum_delta += tuple[i].delta;
        gained += tuple[i].gamma.norm();
        for (std::size_t j = 0; j < i; ++j) cross += tuple[i].d * tuple[j].d;
      }
      if (!a.below(key.alpha) || residual != key.beta) return;
      if (sum_delta != key.delta + gained - key.d + 1 - cross) return;
      std::vector<ComponentProfile> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      r.multisets.insert(sorted);
      ++r.orderings[sorted];
      return;
    }
    for (const ComponentProfile& p : grid) {
      if (p.d > degree_left) continue;
      tuple.push_back(p);
      rec(degree_left - p.d);
      tuple.pop_back();
    }
  };
  rec(key.d - 1);
  return r;
}

}  // namespace

TEST_CASE("irreducible counts") {
  CHECK(Nirr(4, 3, "2", "2") == 620);
  CHECK(Nirr(4, 3, "3", "1") == 584);
  CHECK(Nirr(4, 3, "[]", "4") == 620);
  CHECK(Nirr(3, 1, "[]", "3") == 12);
  CHECK(Nirr(1, 0, "1", "[]") == 1);
  CHECK(Nirr(1, 1, "1", "[]") == 0);
  CHECK(Nirr(2, 1, "[]", "2") == 0);
  CHECK(Nirr(3, 2, "[]", "3") == 0);
}

TEST_CASE("splitting off cubic plus line") {
  CountTable memo;
  SeveriKey a = make_key(4, 3, Tally({2}), Tally({2}));
  SeveriKey b = make_key(4, 3, Tally({3}), Tally({1}));
  CHECK(count(a, memo) - count_irr(a, memo) == 54);
  CHECK(count(b, memo) - count_irr(b, memo) == 52);
}

TEST_CASE("product_degree") {
  std::vector<ComponentDegree> line_cubic{{1, 1}, {8, 1}};
  std::vector<ComponentDegree> line_cubic_2{{2, 1}, {7, 1}};
  CHECK(2 * product_degree(line_cubic, 1) == 18);
  CHECK(product_degree(line_cubic_2, 1) == 36);
  CHECK(2 * product_degree(line_cubic, 1) + product_degree(line_cubic_2, 1) == 54);

  std::vector<ComponentDegree> single{{5, 17}};
  CHECK(product_degree(single, 1) == 17);
  std::vector<ComponentDegree> pair{{1, 1}, {1, 1}};
  CHECK(product_degree(pair, 2) == 1);
  CHECK_THROWS_AS(product_degree(pair, 4), InternalInconsistency);
}

TEST_CASE("decompositions: the cubic-plus-line term") {
  std::vector<Decomposition> decs = decompositions(make_key(4, 3, Tally({2}), Tally({2})));
  ComponentProfile cubic{3, 1, Tally(), Tally({3}), Tally({1})};
  bool found = false;
  for (const Decomposition& d : decs)
    if (d.parts.size() == 1 && d.parts[0] == cubic) found = true;
  CHECK(found);
}

TEST_CASE("decompositions: degree-1 residuals are lines") {
  for (const SeveriKey& key : all_keys(2)) {
    for (const Decomposition& dec : decompositions(key))
      for (const ComponentProfile& p : dec.parts) {
        CHECK(p.d == 1);
        CHECK(p.delta == 0);
      }
  }
}

TEST_CASE("decompositions match brute force") {
  std::vector<SeveriKey> keys{make_key(3, 1, Tally({1}), Tally({2})), make_key(3, 0, Tally(), Tally({1, 1})),
                              make_key(4, 3, Tally({2}), Tally({2})), make_key(4, 2, Tally(), Tally({4})),
                              make_key(4, 1, Tally({1}), Tally({1, 1}))};
  for (const SeveriKey& key : keys) {
    CAPTURE(key.str());
    BruteResult brute = brute_decompositions(key);
    std::vector<Decomposition> decs = decompositions(key);
    std::set<std::vector<ComponentProfile>> got;
    for (const Decomposition& d : decs) {
      CHECK(std::is_sorted(d.parts.begin(), d.parts.end()));
      got.insert(d.parts);
      // k! / (ordered tuples giving this multiset) = sigma
      CHECK(factorial(d.parts.size()) == d.sigma * brute.orderings[d.parts]);
    }
    CHECK(got.size() == decs.size());
    CHECK(got == brute.multisets);
  }
}

TEST_CASE("coefficients agree with the product-degree formula; dimensions add up") {
  for (int d = 2; d <= 5; ++d)
    for (const SeveriKey& key : all_keys(d, true))
      for (const Decomposition& dec : decompositions(key)) {
        std::vector<ComponentDegree> comps;
        std::vector<Tally> alpha_parts;
        BigCount rest = 1;
        long dims = 0;
        for (const ComponentProfile& p : dec.parts) {
          comps.push_back({dimension(p.key()), 1});
          dims += dimension(p.key());
          alpha_parts.push_back(p.alpha);
          rest *= choose(p.beta, p.gamma) * power(p.gamma);
        }
        alpha_parts.push_back(key.alpha - dec.alpha_prime);
        CHECK(dims == dimension(key) - 1);
        CHECK(decomposition_coefficient(key, dec) ==
              product_degree(comps, dec.sigma) * multinomial(key.alpha, alpha_parts) * rest);
      }
}

TEST_CASE("irreducible never exceeds total for d <= 4") {
  CountTable memo;
  for (int d = 1; d <= 4; ++d)
    for (const SeveriKey& key : all_keys(d)) {
      CAPTURE(key.str());
      CHECK(count_irr(key, memo) <= count(key, memo));
    }
}

TEST_CASE("rational curves agree with the Kontsevich recursion") {
  CountTable memo;
  for (int d = 1; d <= 5; ++d) {
    CAPTURE(d);
    CHECK(count_irr(make_key(d, arithmetic_genus(d), Tally(), Tally({d})), memo) == oracle::kontsevich(d));
  }
  CHECK(oracle::kontsevich(5) == 87304);
}
