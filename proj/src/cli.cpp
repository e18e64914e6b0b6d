#include "severi/cli.hpp"

#include "severi/cache.hpp"
#include "severi/classical.hpp"
#include "severi/irreducible.hpp"
#include "severi/poly/parse.hpp"
#include "severi/poly/sylvester.hpp"
#include "severi/table.hpp"
#include "severi/tacnode.hpp"
#include "severi/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace severi {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

json tally_json(const Tally& t) { return json(t.entries()); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!s.empty() && s.back() == ',') throw std::invalid_argument("trailing comma in '" + s + "'");
  return out;
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const std::string& part : split_commas(s)) out.push_back(parse_rational(part));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Writes either the bare result (text) or the JSON record.
struct Emitter {
  std::ostream& out;
  std::string format;

  void record(const std::string& command, const json& inputs, const json& result,
              const std::vector<std::string>& citations, const std::string& text) const {
    if (format == "json") {
      json j{{"command", command}, {"inputs", inputs}, {"result", result}, {"citations", citations}};
      out << j.dump() << '\n';
    } else {
      out << text << '\n';
    }
  }
};

template <class F>
std::string coords_text(const std::vector<F>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    if constexpr (std::is_same_v<F, Rational>)
      s += v[i].get_str();
    else
      s += v[i].str();
  }
  return s + ")";
}

template <class F>
json coords_json(const std::vector<F>& v) {
  json a = json::array();
  for (const F& x : v) {
    if constexpr (std::is_same_v<F, Rational>)
      a.push_back(x.get_str());
    else
      a.push_back(x.str());
  }
  return a;
}

json profile_json(const NodeProfile& p) { return {{"double_roots", p.double_roots}, {"worse", p.worse}}; }

struct CountArgs {
  int d = 0;
  int delta = 0;
  std::string alpha = "[]";
  std::string beta = "[]";
  bool irr = false;
  bool expand = false;
  std::string cache;
};

int cmd_count(const CountArgs& a, const std::string& format, std::ostream& out, std::ostream& err) {
  SeveriKey key{a.d, a.delta, parse_tally(a.alpha), parse_tally(a.beta)};
  key.validate();

  CountTable memo;
  if (!a.cache.empty()) {
    std::ifstream in(a.cache);
    if (in) {
      CacheLoadReport report = load_cache(in, memo);
      for (const std::string& w : report.warnings) err << "warning: " << a.cache << ": " << w << '\n';
    }
  }

  auto value_of = [&](const SeveriKey& k) { return a.irr ? count_irr(k, memo) : count(k, memo); };
  const BigCount value = value_of(key);
  const std::string name = (a.irr ? "N_irr" : "N") + key.str().substr(1);

  json inputs{{"d", a.d},        {"delta", a.delta}, {"alpha", tally_json(key.alpha)},
              {"beta", tally_json(key.beta)}, {"irr", a.irr}};
  std::vector<std::string> citations{a.irr ? "irreducible Caporaso-Harris recursion" : "Caporaso-Harris recursion"};

  struct Row {
    std::string coefficient;
    std::vector<std::string> children;
    std::string value;
    std::string origin;
    int k;
  };
  std::vector<Row> rows;
  if (a.expand && !(a.irr ? count_irr_base_case(key) : count_base_case(key))) {
    auto origin_name = [](TermOrigin o) { return o == TermOrigin::first_sum ? "first_sum" : "second_sum"; };
    if (a.irr) {
      for (const IrrTerm& t : expand_irr(key)) {
        BigCount v = t.coefficient;
        Row r{to_decimal(t.coefficient), {}, "", origin_name(t.origin), t.k};
        for (const SeveriKey& c : t.children) {
          r.children.push_back("N_irr" + c.str().substr(1));
          v *= count_irr(c, memo);
        }
        r.value = to_decimal(v);
        rows.push_back(std::move(r));
      }
    } else {
      for (const Term& t : prune_zero(expand(key), memo))
        rows.push_back({to_decimal(t.coefficient), {t.child.str()}, to_decimal(t.coefficient * count(t.child, memo)),
                        origin_name(t.origin), t.k});
    }
  }

  if (!a.cache.empty()) {
    std::ofstream o(a.cache);
    if (!o)
      err << "warning: cannot write cache " << a.cache << '\n';
    else
      save_cache(o, memo);
  }

  if (format == "csv") {
    out << "expression,coefficient,value,origin\n";
    out << csv_field(name) << ",," << to_decimal(value) << ",total\n";
    for (const Row& r : rows) {
      std::string expr;
      for (const std::string& c : r.children) expr += (expr.empty() ? "" : " * ") + c;
      out << csv_field(expr) << ',' << r.coefficient << ',' << r.value << ',' << r.origin << '\n';
    }
    return kOk;
  }
  if (!a.expand) {
    Emitter{out, format}.record("count", inputs, to_decimal(value), citations, to_decimal(value));
    return kOk;
  }
  std::string text = name + " = " + to_decimal(value);
  json terms = json::array();
  for (const Row& r : rows) {
    std::string prod;
    for (const std::string& c : r.children) prod += " * " + c;
    text += "\n  " + r.coefficient + prod + " = " + r.value + "  [" + r.origin +
            (r.origin == "first_sum" ? ", k=" + std::to_string(r.k) : "") + "]";
    terms.push_back({{"coefficient", r.coefficient}, {"children", r.children}, {"value", r.value},
                     {"origin", r.origin}, {"k", r.k}});
  }
  Emitter{out, format}.record("count", inputs, {{"value", to_decimal(value)}, {"terms", terms}}, citations, text);
  return kOk;
}

int cmd_verify(const std::string& only, const std::string& format, std::ostream& out) {
  std::vector<VerifyRow> rows = run_verify(only.empty() ? std::nullopt : std::optional<std::string>(only));
  bool all = true;
  for (const VerifyRow& r : rows) all = all && r.passed;
  if (format == "csv") {
    out << "expression,expected,computed,status,citation\n";
    for (const VerifyRow& r : rows)
      out << csv_field(r.expression) << ',' << csv_field(r.expected) << ',' << csv_field(r.computed) << ','
          << (r.passed ? "pass" : "fail") << ',' << csv_field(r.citation) << '\n';
  } else if (format == "json") {
    json arr = json::array();
    for (const VerifyRow& r : rows)
      arr.push_back({{"suite", r.suite},
                     {"expression", r.expression},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"status", r.passed ? "pass" : "fail"},
                     {"citation", r.citation}});
    std::vector<std::string> cites;
    for (const VerifyRow& r : rows)
      if (std::find(cites.begin(), cites.end(), r.citation) == cites.end()) cites.push_back(r.citation);
    json j{{"command", "verify"}, {"inputs", {{"only", only.empty() ? json(nullptr) : json(only)}}},
           {"result", arr}, {"citations", cites}};
    out << j.dump() << '\n';
  } else {
    int passed = 0;
    for (const VerifyRow& r : rows) {
      passed += r.passed;
      out << (r.passed ? "PASS  " : "FAIL  ") << r.expression << " = " << r.computed;
      if (!r.passed) out << " (expected " << r.expected << ")";
      out << "  [" << r.citation << "]\n";
    }
    out << passed << "/" << rows.size() << " checks passed\n";
  }
  return all ? kOk : kFailed;
}

VersalPoint<Rational> versal_point(int m, const std::string& alpha, const std::string& beta) {
  VersalPoint<Rational> p{m, rational_list(alpha), rational_list(beta)};
  p.validate();
  return p;
}

struct TacnodeArgs {
  int m = 2;
  std::string alpha, beta;
  std::string t = "1";
  bool profile = false;
  std::string kind = "T";
  int n = 0;
  std::string gamma = "1";
  int l = 1;
};

struct ClassicalArgs {
  long d = 2;
  long h = 1;
  long m = 1, m_prime = 1, self_q = 0, self_q_prime = 0;
  std::vector<std::string> others;
};

struct PolyArgs {
  std::string var = "x";
  std::vector<std::string> exprs;
  std::string weights;
};

struct TableArgs {
  int d = 4;
  bool irr = false;
  bool parallel = false;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Severi degrees, classical formulas and the tacnode lab", "severi"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  CountArgs ca;
  CLI::App* count_cmd = app.add_subcommand("count", "Severi degree N^{d,delta}(alpha,beta)");
  count_cmd->add_option("--d", ca.d, "Curve degree")->required();
  count_cmd->add_option("--delta", ca.delta, "Number of nodes")->required();
  count_cmd->add_option("--alpha", ca.alpha, "Assigned contacts: k or [n1,n2,...]")->capture_default_str();
  count_cmd->add_option("--beta", ca.beta, "Unassigned contacts: k or [n1,n2,...]")->capture_default_str();
  count_cmd->add_flag("--irr", ca.irr, "Count irreducible curves only");
  count_cmd->add_flag("--expand", ca.expand, "Show the recursion terms");
  count_cmd->add_option("--cache", ca.cache, "NDJSON memo cache to read and update");
  count_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string only;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Recompute the embedded reference values");
  verify_cmd->add_option("--only", only, "Restrict to one suite")->check(CLI::IsMember(verify_suites()));
  verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  TacnodeArgs ta;
  CLI::App* tac = app.add_subcommand("tacnode", "Versal deformation of the m-tacnode");
  tac->require_subcommand(1);
  auto add_format = [&format](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* t_disc = tac->add_subcommand("disc", "Fibre discriminant delta(x)");
  CLI::App* t_prof = tac->add_subcommand("profile", "Double roots of delta(x)");
  for (CLI::App* c : {t_disc, t_prof}) {
    c->add_option("--m", ta.m, "Tacnode order")->required();
    c->add_option("--alpha", ta.alpha, "alpha_0,...,alpha_{m-2} (rationals p/q)")->required();
    c->add_option("--beta", ta.beta, "beta_0,...,beta_{m-1} (rationals p/q)")->required();
    add_format(c);
  }
  CLI::App* t_psi = tac->add_subcommand("psi", "Point of the Psi-curve");
  t_psi->add_option("--m", ta.m, "Tacnode order")->required();
  t_psi->add_option("--t", ta.t, "Curve parameter (rational)")->capture_default_str();
  t_psi->add_flag("--profile", ta.profile, "Print the node profile instead of the coordinates");
  add_format(t_psi);
  CLI::App* t_swal = tac->add_subcommand("swallowtail", "Discriminant of the 2-tacnode deformation");
  add_format(t_swal);
  CLI::App* t_cusp = tac->add_subcommand("cusp", "Check the cusp-locus equations");
  add_format(t_cusp);
  CLI::App* t_cheb = tac->add_subcommand("cheb", "Chebyshev polynomial");
  t_cheb->add_option("--kind", ta.kind, "T, U, V or W")->check(CLI::IsMember({"T", "U", "V", "W"}))->required();
  t_cheb->add_option("--n", ta.n, "Index")->check(CLI::NonNegativeNumber)->required();
  add_format(t_cheb);
  CLI::App* t_nu = tac->add_subcommand("nu", "The polynomial nu_gamma");
  t_nu->add_option("--m", ta.m, "Tacnode order")->required();
  t_nu->add_option("--gamma", ta.gamma, "Non-zero rational")->capture_default_str();
  add_format(t_nu);
  CLI::App* t_ids = tac->add_subcommand("identities", "Chebyshev square identities");
  t_ids->add_option("--l", ta.l, "Half index l >= 1")->required();
  add_format(t_ids);

  ClassicalArgs cl;
  CLI::App* cla = app.add_subcommand("classical", "Classical surface formulas");
  cla->require_subcommand(1);
  CLI::App* c_salmon = cla->add_subcommand("salmon", "Salmon degrees of a general surface");
  c_salmon->add_option("--d", cl.d, "Surface degree")->required();
  add_format(c_salmon);
  CLI::App* c_dual = cla->add_subcommand("dual", "Limit of the dual degree");
  c_dual->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  c_dual->add_option("--d", cl.d, "Surface degree")->required();
  c_dual->add_option("--h", cl.h, "Degree of one component")->required();
  add_format(c_dual);
  CLI::App* c_triple = cla->add_subcommand("triple", "Triple point formula residual");
  c_triple->add_option("--m", cl.m, "Multiplicity of Q")->capture_default_str();
  c_triple->add_option("--m-prime", cl.m_prime, "Multiplicity of Q'")->capture_default_str();
  c_triple->add_option("--self-q", cl.self_q, "deg N_{B/Q}")->required();
  c_triple->add_option("--self-q-prime", cl.self_q_prime, "deg N_{B/Q'}")->required();
  c_triple->add_option("--other", cl.others, "mult:count for another component (repeatable)");
  add_format(c_triple);

  PolyArgs pa;
  CLI::App* poly = app.add_subcommand("poly", "Polynomial algebra");
  poly->require_subcommand(1);
  CLI::App* p_disc = poly->add_subcommand("disc", "Discriminant");
  p_disc->add_option("--var", pa.var, "Variable")->capture_default_str();
  p_disc->add_option("poly", pa.exprs, "Polynomial")->required()->expected(1);
  CLI::App* p_res = poly->add_subcommand("res", "Resultant");
  p_res->add_option("--var", pa.var, "Variable")->capture_default_str();
  p_res->add_option("polys", pa.exprs, "Two polynomials f g")->required()->expected(2);
  CLI::App* p_gcd = poly->add_subcommand("gcd", "Monic gcd of univariate polynomials");
  p_gcd->add_option("polys", pa.exprs, "Two polynomials f g")->required()->expected(2);
  CLI::App* p_sqf = poly->add_subcommand("sqf", "Square-free profile");
  p_sqf->add_option("poly", pa.exprs, "Polynomial")->required()->expected(1);
  CLI::App* p_qdeg = poly->add_subcommand("qdeg", "Quasi-homogeneous degree");
  p_qdeg->add_option("poly", pa.exprs, "Polynomial")->required()->expected(1);
  p_qdeg->add_option("--weights", pa.weights, "name=w,... for every variable")->required();
  for (CLI::App* c : {p_disc, p_res, p_gcd, p_sqf, p_qdeg}) add_format(c);

  TableArgs tb;
  CLI::App* table = app.add_subcommand("table", "All Severi degrees up to a given degree");
  table->add_option("--d", tb.d, "Largest curve degree")->check(CLI::Range(1, 8))->capture_default_str();
  table->add_flag("--irr", tb.irr, "Irreducible counts");
  table->add_flag("--parallel", tb.parallel, "Level-parallel build");
  table->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Emitter emit{out, format};
  try {
    if (*count_cmd) return cmd_count(ca, format, out, err);
    if (*verify_cmd) return cmd_verify(only, format, out);

    if (*t_disc || *t_prof) {
      VersalPoint<Rational> p = versal_point(ta.m, ta.alpha, ta.beta);
      json inputs{{"m", ta.m}, {"alpha", coords_json(p.alpha)}, {"beta", coords_json(p.beta)}};
      if (*t_disc) {
        std::string s = fiber_discriminant(p).str();
        emit.record("tacnode disc", inputs, s, {"fibre discriminant of the versal deformation"}, s);
      } else {
        NodeProfile np = node_profile(p);
        emit.record("tacnode profile", inputs, profile_json(np), {"nodes over double roots of the discriminant"},
                    np.str());
      }
      return kOk;
    }
    if (*t_psi) {
      Rational t = parse_rational(ta.t);
      VersalPoint<RadicalNumber> p = psi_point(ta.m, t);
      json inputs{{"m", ta.m}, {"t", t.get_str()}};
      std::vector<std::string> cite{"Chebyshev construction of the Psi-curve"};
      if (ta.profile) {
        NodeProfile np = node_profile(p);
        emit.record("tacnode psi", inputs, profile_json(np), cite, np.str());
      } else {
        emit.record("tacnode psi", inputs, {{"alpha", coords_json(p.alpha)}, {"beta", coords_json(p.beta)}}, cite,
                    "alpha = " + coords_text(p.alpha) + ", beta = " + coords_text(p.beta));
      }
      return kOk;
    }
    if (*t_swal) {
      std::string s = swallowtail().str();
      emit.record("tacnode swallowtail", json::object(), s, {"swallowtail equation"}, s);
      return kOk;
    }
    if (*t_cusp) {
      bool ok = cusp_locus_verify();
      emit.record("tacnode cusp", json::object(), ok, {"equations of the cusp locus"},
                  ok ? "cusp locus generators vanish" : "cusp locus generators do not vanish");
      return ok ? kOk : kFailed;
    }
    if (*t_cheb) {
      std::string s = chebyshev(parse_chebyshev_kind(ta.kind), ta.n).str();
      emit.record("tacnode cheb", {{"kind", ta.kind}, {"n", ta.n}}, s, {"Chebyshev recurrence"}, s);
      return kOk;
    }
    if (*t_nu) {
      Rational g = parse_rational(ta.gamma);
      std::string s = nu_gamma(ta.m, g).str();
      emit.record("tacnode nu", {{"m", ta.m}, {"gamma", g.get_str()}}, s, {"Chebyshev model of nu_gamma"}, s);
      return kOk;
    }
    if (*t_ids) {
      std::vector<IdentityRow> rows = chebyshev_identity_check(ta.l);
      bool as_expected = true;
      json arr = json::array();
      std::string text;
      for (const IdentityRow& r : rows) {
        as_expected = as_expected && r.holds == r.expected;
        arr.push_back({{"identity", r.name}, {"holds", r.holds}, {"expected", r.expected},
                       {"residual", r.residual.str()}});
        if (!text.empty()) text += '\n';
        text += std::string(r.holds ? "holds " : "fails ") + r.name;
        if (!r.holds) text += "  (residual " + r.residual.str() + ")";
      }
      emit.record("tacnode identities", {{"l", ta.l}}, arr, {"Chebyshev square identities"}, text);
      return as_expected ? kOk : kFailed;
    }

    if (*c_salmon) {
      SalmonDegrees s = salmon(cl.d);
      json res{{"dual", to_decimal(s.dual)},
               {"bitangent_curve", to_decimal(s.bitangent_curve)},
               {"cuspidal_curve", to_decimal(s.cuspidal_curve)},
               {"parabolic_curve", to_decimal(s.parabolic_curve)},
               {"triple_points", to_decimal(s.triple_points)}};
      std::string text = "dual " + to_decimal(s.dual) + "\nbitangent_curve " + to_decimal(s.bitangent_curve) +
                         "\ncuspidal_curve " + to_decimal(s.cuspidal_curve) + "\nparabolic_curve " +
                         to_decimal(s.parabolic_curve) + "\ntriple_points " + to_decimal(s.triple_points);
      emit.record("classical salmon", {{"d", cl.d}}, res, {"Salmon's formulas for a general surface in P^3"}, text);
      return kOk;
    }
    if (*c_dual) {
      DualCheck c = limit_dual_check(cl.d, cl.h);
      emit.record("classical dual", {{"d", cl.d}, {"h", cl.h}},
                  {{"lhs", to_decimal(c.lhs)}, {"rhs", to_decimal(c.rhs)}, {"equal", c.equal}},
                  {"degenerating the dual surface"},
                  to_decimal(c.lhs) + " " + to_decimal(c.rhs) + " " + (c.equal ? "equal" : "different"));
      return c.equal ? kOk : kFailed;
    }
    if (*c_triple) {
      NCConfig cfg{cl.m, cl.m_prime, cl.self_q, cl.self_q_prime, {}};
      json others = json::array();
      for (const std::string& o : cl.others) {
        auto colon = o.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("--other expects mult:count, got '" + o + "'");
        long mult = std::stol(o.substr(0, colon)), cnt = std::stol(o.substr(colon + 1));
        cfg.others.push_back({mult, cnt});
        others.push_back({mult, cnt});
      }
      TripleCheck r = triple_point_check(cfg);
      json inputs{{"m", cl.m}, {"m_prime", cl.m_prime}, {"self_q", cl.self_q}, {"self_q_prime", cl.self_q_prime},
                  {"others", others}};
      emit.record("classical triple", inputs, {{"residual", r.residual}, {"valid", r.valid}},
                  {"triple point formula"},
                  std::to_string(r.residual) + (r.valid ? " balanced" : " unbalanced"));
      return kOk;
    }

    if (*p_disc) {
      std::string s = discriminant(parse_poly(pa.exprs[0]).to_multi(), pa.var).compact().str();
      emit.record("poly disc", {{"f", pa.exprs[0]}, {"var", pa.var}}, s, {}, s);
      return kOk;
    }
    if (*p_res) {
      std::string s =
          resultant(parse_poly(pa.exprs[0]).to_multi(), parse_poly(pa.exprs[1]).to_multi(), pa.var).compact().str();
      emit.record("poly res", {{"f", pa.exprs[0]}, {"g", pa.exprs[1]}, {"var", pa.var}}, s, {}, s);
      return kOk;
    }
    if (*p_gcd) {
      ParsedPoly f = parse_poly(pa.exprs[0]), g = parse_poly(pa.exprs[1]);
      std::string var = !f.vars.empty() ? f.vars[0] : !g.vars.empty() ? g.vars[0] : "x";
      std::string s = gcd(f.to_uni(var), g.to_uni(var)).str();
      emit.record("poly gcd", {{"f", pa.exprs[0]}, {"g", pa.exprs[1]}}, s, {}, s);
      return kOk;
    }
    if (*p_sqf) {
      std::vector<SquarefreePart> parts = squarefree_profile(parse_poly(pa.exprs[0]).to_uni());
      json arr = json::array();
      std::string text = "[";
      for (const SquarefreePart& p : parts) {
        arr.push_back({{"multiplicity", p.multiplicity}, {"degree", p.degree}});
        text += (text.size() > 1 ? ", (" : "(") + std::to_string(p.multiplicity) + ", " + std::to_string(p.degree) + ")";
      }
      emit.record("poly sqf", {{"f", pa.exprs[0]}}, arr, {}, text + "]");
      return kOk;
    }
    if (*p_qdeg) {
      std::map<std::string, int> weights;
      for (const std::string& w : split_commas(pa.weights)) {
        auto eq = w.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--weights expects name=w, got '" + w + "'");
        weights[w.substr(0, eq)] = std::stoi(w.substr(eq + 1));
      }
      std::optional<int> q = quasi_degree(parse_poly(pa.exprs[0]).to_multi(), weights);
      emit.record("poly qdeg", {{"f", pa.exprs[0]}, {"weights", weights}}, q ? json(*q) : json("NOT_QH"), {},
                  q ? std::to_string(*q) : "NOT_QH");
      return kOk;
    }

    if (*table) {
      CountTable memo;
      if (tb.parallel)
        build_table_parallel(tb.d, tb.irr, memo);
      else
        build_table_serial(tb.d, tb.irr, memo);
      std::vector<CountTable::Entry> entries = memo.entries();
      std::erase_if(entries, [&](const CountTable::Entry& e) { return e.irreducible != tb.irr || e.key.d > tb.d; });
      if (format == "csv") {
        out << "d,delta,alpha,beta,value\n";
        for (const auto& e : entries)
          out << e.key.d << ',' << e.key.delta << ',' << csv_field(e.key.alpha.str()) << ','
              << csv_field(e.key.beta.str()) << ',' << to_decimal(e.value) << '\n';
      } else if (format == "json") {
        for (const auto& e : entries) out << cache_record(e.key, e.irreducible, e.value) << '\n';
      } else {
        for (const auto& e : entries) out << (tb.irr ? "N_irr" : "N") << e.key.str().substr(1) << " = "
                                          << to_decimal(e.value) << '\n';
      }
      return kOk;
    }
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace severi
