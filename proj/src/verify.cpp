#include "severi/verify.hpp"

#include "severi/classical.hpp"
#include "severi/irreducible.hpp"
#include "severi/tacnode.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace severi {

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"severi", "irr", "salmon", "tacnode", "chebyshev"};
  return suites;
}

namespace {

struct Check {
  std::string suite;
  std::string expression;
  std::string expected;
  std::function<std::string()> compute;
  std::string citation;
};

SeveriKey key(int d, int delta, const char* alpha, const char* beta) {
  return make_key(d, delta, parse_tally(alpha), parse_tally(beta));
}

std::string shown(const char* t) {
  std::string s(t);
  return s == "[]" ? "0" : s;
}

std::vector<Check> build_checks(CountTable& memo) {
  std::vector<Check> checks;
  auto total = [&](int d, int delta, const char* a, const char* b, const char* want, const char* cite) {
    std::string expr = "N^{" + std::to_string(d) + "," + std::to_string(delta) + "}(" + shown(a) + "," + shown(b) + ")";
    checks.push_back({"severi", expr, want, [&memo, k = key(d, delta, a, b)] { return to_decimal(count(k, memo)); },
                      cite});
  };
  auto irr = [&](int d, int delta, const char* a, const char* b, const char* want, const char* cite) {
    std::string expr =
        "N_irr^{" + std::to_string(d) + "," + std::to_string(delta) + "}(" + shown(a) + "," + shown(b) + ")";
    checks.push_back({"irr", expr, want, [&memo, k = key(d, delta, a, b)] { return to_decimal(count_irr(k, memo)); },
                      cite});
  };

  const char* quartic = "Caporaso-Harris table for 2-nodal quartics";
  total(4, 2, "[]", "4", "225", quartic);
  total(4, 2, "1", "3", "225", quartic);
  total(4, 2, "2", "2", "225", quartic);
  total(4, 2, "3", "1", "222", quartic);
  total(4, 2, "4", "[]", "172", quartic);
  const char* chain = "tangency chain for 1-nodal cubics";
  total(3, 1, "[]", "[1,1]", "36", chain);
  total(3, 1, "1", "[0,1]", "16", chain);
  total(3, 1, "[0,1]", "1", "10", chain);
  total(3, 1, "[1,1]", "[]", "8", chain);
  total(3, 1, "[]", "3", "12", "rational plane cubics through 8 points");
  total(3, 2, "[]", "3", "21", "2-nodal cubics");
  total(2, 1, "[]", "2", "3", "singular conics in a pencil");
  total(2, 0, "[]", "[0,1]", "2", "conics tangent to a line");
  total(2, 0, "1", "1", "1", "conics through an assigned point of a line");
  const char* trinodal = "trinodal plane quartics";
  total(4, 3, "[]", "4", "675", trinodal);
  total(4, 3, "2", "2", "674", "Caporaso-Harris recursion, worked quartic example");
  total(4, 3, "3", "1", "636", "Caporaso-Harris recursion, worked quartic example");

  irr(4, 3, "[]", "4", "620", "irreducible trinodal quartics");
  irr(4, 3, "2", "2", "620", "irreducible recursion, worked quartic example");
  irr(4, 3, "3", "1", "584", "irreducible recursion, worked quartic example");
  irr(3, 1, "[]", "3", "12", "rational plane cubics through 8 points");
  checks.push_back({"irr", "N^{4,3}(2,2) - N_irr^{4,3}(2,2)", "54",
                    [&memo] {
                      SeveriKey k = key(4, 3, "2", "2");
                      return to_decimal(count(k, memo) - count_irr(k, memo));
                    },
                    "cubic-plus-line splitting count"});
  checks.push_back({"irr", "N^{4,3}(3,1) - N_irr^{4,3}(3,1)", "52",
                    [&memo] {
                      SeveriKey k = key(4, 3, "3", "1");
                      return to_decimal(count(k, memo) - count_irr(k, memo));
                    },
                    "cubic-plus-line splitting count"});
  checks.push_back({"irr", "2 x deg(lines x cubics; 1,8) + deg(lines x cubics; 2,7)", "54",
                    [] {
                      std::vector<ComponentDegree> a{{1, 1}, {8, 1}}, b{{2, 1}, {7, 1}};
                      return to_decimal(2 * product_degree(a, 1) + product_degree(b, 1));
                    },
                    "degree of a product of Severi varieties"});

  const char* salmon_cite = "Salmon's formulas for a general surface in P^3";
  checks.push_back({"salmon", "t(3)", "45", [] { return to_decimal(salmon(3).triple_points); }, salmon_cite});
  checks.push_back({"salmon", "t(4)", "3200", [] { return to_decimal(salmon(4).triple_points); }, salmon_cite});
  checks.push_back({"salmon", "dual(3)", "12", [] { return to_decimal(salmon(3).dual); }, salmon_cite});
  checks.push_back({"salmon", "limit dual degree, d=4 h=2", "36",
                    [] { return to_decimal(limit_dual_check(4, 2).lhs); }, "degenerating the dual surface"});
  checks.push_back({"salmon", "limit dual degree, d=4 h=1", "36",
                    [] { return to_decimal(limit_dual_check(4, 1).lhs); }, "degenerating the dual surface"});
  checks.push_back({"salmon", "limit dual identity, 2 <= d <= 12", "holds",
                    [] {
                      for (long d = 2; d <= 12; ++d)
                        for (long h = 1; h < d; ++h)
                          if (!limit_dual_check(d, h).equal) return "fails at d=" + std::to_string(d);
                      return std::string("holds");
                    },
                    "degenerating the dual surface"});

  checks.push_back({"tacnode", "Disc_x((x^2 + a0)^2 - 4(b1 x + b0))", swallowtail_expected().str(),
                    [] { return swallowtail().str(); }, "swallowtail equation"});
  checks.push_back({"tacnode", "quasi-degree of the swallowtail, weights (2,4,3)", "12",
                    [] {
                      auto q = quasi_degree(swallowtail(), {{"a0", 2}, {"b0", 4}, {"b1", 3}});
                      return q ? std::to_string(*q) : std::string("not quasi-homogeneous");
                    },
                    "quasi-homogeneity of the swallowtail"});
  checks.push_back({"tacnode", "cusp locus generators on the u-parametrization", "vanish",
                    [] { return std::string(cusp_locus_verify() ? "vanish" : "do not vanish"); },
                    "equations of the cusp locus"});
  for (int m = 2; m <= 5; ++m)
    checks.push_back({"tacnode", "node profile of the Psi fibre, m=" + std::to_string(m) + ", t=1",
                      NodeProfile{m - 1, false}.str(), [m] { return node_profile(psi_point(m, 1)).str(); },
                      "smoothing an m-tacnode to m-1 nodes"});
  checks.push_back({"tacnode", "node profile at alpha=(-1), beta=(0,0)", "(2, false)",
                    [] {
                      VersalPoint<Rational> p{2, {-1}, {0, 0}};
                      return node_profile(p).str();
                    },
                    "beta = 0 gives m nodes"});
  checks.push_back({"tacnode", "sheet profile of orders (2,2)", "(4, 2, 2, 1)",
                    [] {
                      std::vector<int> orders{2, 2};
                      SheetProfile s = sheet_profile(orders);
                      return "(" + to_decimal(s.mu) + ", " + std::to_string(s.lambda) + ", " + to_decimal(s.kappa) +
                             ", " + std::to_string(s.branch_mult) + ")";
                    },
                    "branches of the relative Severi variety"});

  const char* table = "Chebyshev polynomial tables";
  const std::pair<const char*, const char*> polys[] = {
      {"T", "8x^4 - 8x^2 + 1"},
      {"U", "16x^4 - 12x^2 + 1"},
      {"V", "16x^4 - 8x^3 - 12x^2 + 4x + 1"},
      {"W", "16x^4 + 8x^3 - 12x^2 - 4x + 1"},
  };
  for (const auto& [kind, want] : polys)
    checks.push_back({"chebyshev", std::string(kind) + "_4", want,
                      [k = std::string(kind)] { return chebyshev(parse_chebyshev_kind(k), 4).str(); }, table});
  checks.push_back({"chebyshev", "W_2", "4x^2 + 2x - 1",
                    [] { return chebyshev(ChebyshevKind::W, 2).str(); }, table});
  checks.push_back({"chebyshev", "square identities for l <= 10", "as expected",
                    [] {
                      for (int l = 1; l <= 10; ++l)
                        for (const IdentityRow& r : chebyshev_identity_check(l))
                          if (r.holds != r.expected) return r.name + (r.holds ? " holds" : " fails");
                      return std::string("as expected");
                    },
                    "Chebyshev square identities"});
  return checks;
}

}  // namespace

std::vector<VerifyRow> run_verify(const std::optional<std::string>& only) {
  const auto& suites = verify_suites();
  if (only && std::find(suites.begin(), suites.end(), *only) == suites.end())
    throw std::invalid_argument("unknown suite '" + *only + "'");
  CountTable memo;
  std::vector<VerifyRow> rows;
  for (const Check& c : build_checks(memo)) {
    if (only && c.suite != *only) continue;
    std::string computed;
    try {
      computed = c.compute();
    } catch (const std::exception& e) {
      computed = std::string("error: ") + e.what();
    }
    rows.push_back({c.suite, c.expression, c.expected, computed, computed == c.expected, c.citation});
  }
  return rows;
}

}  // namespace severi
