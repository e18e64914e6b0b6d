// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "oracles.hpp"

#include "severi/classical.hpp"
#include "severi/irreducible.hpp"
#include "severi/poly/multipoly.hpp"
#include "severi/table.hpp"
#include "severi/tacnode.hpp"
#include "severi/tally.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace severi;

namespace {

SeveriKey K(int d, int delta, const char* a, const char* b) {
  return make_key(d, delta, parse_tally(a), parse_tally(b));
}

struct Outcome {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) o.expect(false, "took " + std::to_string(secs) + " s");
  if (!o.ok) ++failures;
  std::printf("%s %s: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : " -- ",
              o.note.c_str());
}

}  // namespace

int main() {
  criterion("AC1", "2-nodal quartics", 1.0, [](Outcome& o) {
    CountTable m;
    o.expect(count(K(4, 2, "[]", "4"), m) == 225, "N^{4,2}(0,4)");
    o.expect(count(K(4, 2, "1", "3"), m) == 225, "N^{4,2}(1,3)");
    o.expect(count(K(4, 2, "2", "2"), m) == 225, "N^{4,2}(2,2)");
    o.expect(count(K(4, 2, "3", "1"), m) == 222, "N^{4,2}(3,1)");
    o.expect(count(K(4, 2, "4", "[]"), m) == 172, "N^{4,2}(4,0)");
  });

  criterion("AC2", "tangency chain for cubics", 1.0, [](Outcome& o) {
    CountTable m;
    o.expect(count(K(3, 1, "[]", "[1,1]"), m) == 36, "N^{3,1}(0,[1,1])");
    o.expect(count(K(3, 1, "1", "[0,1]"), m) == 16, "N^{3,1}(1,[0,1])");
    o.expect(count(K(3, 1, "[0,1]", "1"), m) == 10, "N^{3,1}([0,1],1)");
    o.expect(count(K(3, 1, "[1,1]", "[]"), m) == 8, "N^{3,1}([1,1],0)");
    o.expect(count(K(3, 1, "[]", "3"), m) == 12, "N^{3,1}(0,3)");
    o.expect(count(K(3, 2, "[]", "3"), m) == 21, "N^{3,2}(0,3)");
    o.expect(count(K(2, 1, "[]", "2"), m) == 3, "N^{2,1}(0,2)");
    o.expect(count(K(2, 0, "[]", "[0,1]"), m) == 2, "N^{2,0}(0,[0,1])");
    o.expect(count(K(2, 0, "1", "1"), m) == 1, "N^{2,0}(1,1)");
  });

  criterion("AC3", "trinodal quartics, total and irreducible", 5.0, [](Outcome& o) {
    CountTable m;
    SeveriKey a = K(4, 3, "2", "2"), b = K(4, 3, "3", "1");
    o.expect(count(K(4, 3, "[]", "4"), m) == 675, "N^{4,3}(0,4)");
    o.expect(count(a, m) == 674, "N^{4,3}(2,2)");
    o.expect(count(b, m) == 636, "N^{4,3}(3,1)");
    o.expect(count_irr(K(4, 3, "[]", "4"), m) == 620, "N_irr^{4,3}(0,4)");
    o.expect(count_irr(a, m) == 620, "N_irr^{4,3}(2,2)");
    o.expect(count_irr(b, m) == 584, "N_irr^{4,3}(3,1)");
    o.expect(count(a, m) - count_irr(a, m) == 54, "difference 54");
    o.expect(count(b, m) - count_irr(b, m) == 52, "difference 52");
    std::vector<ComponentDegree> one{{1, 1}, {8, 1}}, two{{2, 1}, {7, 1}};
    BigCount eighteen = 2 * product_degree(one, 1), thirty_six = product_degree(two, 1);
    o.expect(eighteen == 18 && thirty_six == 36 && eighteen + thirty_six == 54, "product_degree 18 + 36");
  });

  criterion("AC4", "Salmon formulas and the limit dual identity", 0.1, [](Outcome& o) {
    o.expect(salmon(3).triple_points == 45, "t(3)");
    o.expect(salmon(4).triple_points == 3200, "t(4)");
    o.expect(salmon(3).dual == 12, "dual(3)");
    for (long d = 2; d <= 12; ++d)
      for (long h = 1; h <= d - 1; ++h)
        o.expect(limit_dual_check(d, h).equal, "limit dual d=" + std::to_string(d) + " h=" + std::to_string(h));
  });

  criterion("AC5", "swallowtail", 0.1, [](Outcome& o) {
    MultiPoly s = swallowtail();
    o.expect(s == swallowtail_expected(), "equation");
    o.expect(s.terms().size() == 5, "five monomials");
    o.expect(quasi_degree(s, {{"a0", 2}, {"b0", 4}, {"b1", 3}}) == 12, "quasi-degree 12");
  });

  criterion("AC6", "cusp locus", 0, [](Outcome& o) { o.expect(cusp_locus_verify(), "generators vanish"); });

  criterion("AC7", "tacnode smoothing along the Psi curve", 0.1, [](Outcome& o) {
    for (int m = 2; m <= 5; ++m)
      for (Rational t : {Rational(1), Rational(1, 2), Rational(2), Rational(-1)}) {
        VersalPoint<RadicalNumber> p = psi_point(m, t);
        std::string at = "m=" + std::to_string(m) + " t=" + t.get_str();
        o.expect(node_profile(p) == NodeProfile{m - 1, false}, "profile " + at);
        o.expect(p.beta[0] == RadicalNumber(pow(t, static_cast<unsigned>(m)) / 4), "beta_0 " + at);
      }
  });

  criterion("AC8", "Chebyshev tables and identities", 0, [](Outcome& o) {
    auto Q = [](std::vector<int> c) { return UniPoly<Rational>(std::vector<Rational>(c.begin(), c.end())); };
    o.expect(chebyshev(ChebyshevKind::T, 4) == Q({1, 0, -8, 0, 8}), "T_4");
    o.expect(chebyshev(ChebyshevKind::U, 4) == Q({1, 0, -12, 0, 16}), "U_4");
    o.expect(chebyshev(ChebyshevKind::V, 4) == Q({1, 4, -12, -8, 16}), "V_4");
    o.expect(chebyshev(ChebyshevKind::W, 4) == Q({1, -4, -12, 8, 16}), "W_4");
    o.expect(chebyshev(ChebyshevKind::V, 3) == Q({1, -4, -4, 8}), "V_3");
    o.expect(chebyshev(ChebyshevKind::W, 3) == Q({-1, -4, 4, 8}), "W_3");
    for (int l = 1; l <= 10; ++l) {
      std::vector<IdentityRow> rows = chebyshev_identity_check(l);
      o.expect(rows.size() == 5, "five identities");
      for (const IdentityRow& r : rows) o.expect(r.holds == r.expected, r.name);
      o.expect(rows[1].holds && !rows[2].holds, "T_{2l} - 1 square identity: holds with U_{l-1}, fails with U_l");
    }
  });

  criterion("AC9", "sheet profiles", 0, [](Outcome& o) {
    auto is = [](std::vector<int> orders, long mu, long lambda, long kappa, long mult) {
      SheetProfile s = sheet_profile(orders);
      return s.mu == mu && s.lambda == lambda && s.kappa == kappa && s.branch_mult == mult;
    };
    o.expect(is({2}, 2, 2, 1, 1), "[2]");
    o.expect(is({2, 2}, 4, 2, 2, 1), "[2,2]");
    o.expect(is({2, 3}, 6, 6, 1, 2), "[2,3]");
  });

  criterion("AC10", "property suites", 0, [](Outcome& o) {
    CountTable m;
    for (int d = 2; d <= 6; ++d) {
      o.expect(count(K(d, 0, "[]", std::to_string(d).c_str()), m) == 1, "smooth d=" + std::to_string(d));
      o.expect(count(K(d, 1, "[]", std::to_string(d).c_str()), m) == 3 * (d - 1) * (d - 1),
               "discriminant d=" + std::to_string(d));
    }
    for (int d = 2; d <= 4; ++d)
      for (const SeveriKey& key : all_keys(d)) {
        BigCount total = 0;
        for (const Term& t : expand(key)) {
          o.expect(dimension(t.child) == dimension(key) - 1, "child dimension at " + key.str());
          total += t.coefficient * count(t.child, m);
        }
        o.expect(total == count(key, m), "expand-sum at " + key.str());
      }
    for (int w = 0; w <= 12; ++w)
      o.expect(static_cast<long>(enumerate_with_weight(w).size()) == oracle::partition_count(w),
               "partitions of " + std::to_string(w));
  });

  criterion("AC11", "rational quintics against the Kontsevich recursion", 30.0, [](Outcome& o) {
    CountTable m;
    o.expect(count_irr(K(5, 6, "[]", "5"), m) == oracle::kontsevich(5), "N_irr^{5,6}(0,5)");
    o.expect(oracle::kontsevich(5) == 87304, "N_5 = 87304");
  });

  return failures == 0 ? 0 : 1;
}
