#include "severi/tacnode.hpp"

#include "severi/poly/sylvester.hpp"

#include <stdexcept>

namespace severi {

namespace {

using QPoly = UniPoly<Rational>;

QPoly x_times(const QPoly& p, const Rational& s) { return (QPoly({Rational(0), s}) * p); }

}  // namespace

ChebyshevKind parse_chebyshev_kind(const std::string& letter) {
  if (letter == "T") return ChebyshevKind::T;
  if (letter == "U") return ChebyshevKind::U;
  if (letter == "V") return ChebyshevKind::V;
  if (letter == "W") return ChebyshevKind::W;
  throw std::invalid_argument("unknown Chebyshev kind '" + letter + "' (expected T, U, V or W)");
}

QPoly chebyshev(ChebyshevKind kind, int n) {
  if (n < 0) throw std::invalid_argument("chebyshev: index must be >= 0");
  QPoly prev = QPoly::constant(1);
  if (n == 0) return prev;
  QPoly cur;
  switch (kind) {
    case ChebyshevKind::T: cur = QPoly({0, 1}); break;
    case ChebyshevKind::U: cur = QPoly({0, 2}); break;
    case ChebyshevKind::V: cur = QPoly({-1, 2}); break;
    case ChebyshevKind::W: cur = QPoly({1, 2}); break;
  }
  for (int k = 1; k < n; ++k) {
    QPoly next = x_times(cur, 2) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QPoly nu_gamma(int m, const Rational& gamma) {
  if (m < 2) throw std::invalid_argument("nu_gamma: m must be >= 2");
  if (gamma == 0) throw std::invalid_argument("nu_gamma: gamma must be non-zero");
  const Rational target = pow(Rational(2), static_cast<unsigned>(m - 1)) * gamma;  // u^m
  Rational t;  // u^2
  if (m % 2 == 0) {
    auto r = rational_root(target, static_cast<unsigned>(m / 2));
    if (!r || *r == 0)
      throw std::invalid_argument("nu_gamma: 2^(m-1)*gamma = " + target.get_str() + " has no rational " +
                                  std::to_string(m / 2) + "-th root; pick gamma = t^" + std::to_string(m / 2) +
                                  "/2^" + std::to_string(m - 1) + " for a rational t");
    t = *r;
  } else {
    auto u = rational_root(target, static_cast<unsigned>(m));
    if (!u)
      throw std::invalid_argument("nu_gamma: 2^(m-1)*gamma = " + target.get_str() + " has no rational " +
                                  std::to_string(m) + "-th root; pick gamma = u^" + std::to_string(m) + "/2^" +
                                  std::to_string(m - 1) + " for a rational u");
    t = *u * *u;
  }

  const QPoly T = chebyshev(ChebyshevKind::T, m);
  const Rational scale = pow(Rational(1, 2), static_cast<unsigned>(m - 1));
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int j = m % 2; j <= m; j += 2)
    c[static_cast<std::size_t>(j)] = scale * T[j] * pow(t, static_cast<unsigned>((m - j) / 2));
  QPoly nu(std::move(c));

  if (!(nu.lc() == 1) || nu[m - 1] != 0 || nu[m - 2] == 0)
    throw InternalInconsistency("nu_gamma: result is not monic with c_{m-1} = 0 and c_{m-2} != 0");
  const int l = m / 2;
  NodeProfile plus = profile_of(nu + QPoly::constant(gamma));
  NodeProfile minus = profile_of(nu - QPoly::constant(gamma));
  NodeProfile want_plus{l, false}, want_minus{m % 2 ? l : l - 1, false};
  if (!(plus == want_plus) || !(minus == want_minus))
    throw InternalInconsistency("nu_gamma: double roots of nu +- gamma are " + plus.str() + " and " + minus.str());
  return nu;
}

PsiCurve psi_curve(int m) {
  if (m < 2) throw std::invalid_argument("psi_curve: m must be >= 2");
  using RPoly = UniPoly<RadicalNumber>;
  const QPoly T = chebyshev(ChebyshevKind::T, m);
  const Rational scale = pow(Rational(1, 2), static_cast<unsigned>(m - 1));
  PsiCurve curve{m, {}, {}};
  // At t = 1 the polynomial is nu_1 = T_m(x / u) with u = 2^{(m-1)/m}.
  for (int j = 0; j <= m - 2; ++j) {
    if ((m - j) % 2) {
      curve.alpha.push_back(RPoly({}, "t"));
      continue;
    }
    RadicalNumber c1 = RadicalNumber(scale * T[j]) * RadicalNumber::radical_power(2, m, (m - 1) * (m - j));
    curve.alpha.push_back(RPoly::monomial(c1, (m - j) / 2, "t"));
  }
  curve.beta.push_back(RPoly::monomial(RadicalNumber(Rational(1, 4)), m, "t"));
  for (int j = 1; j < m; ++j) curve.beta.push_back(RPoly({}, "t"));
  return curve;
}

VersalPoint<RadicalNumber> psi_point(int m, const Rational& t) {
  PsiCurve curve = psi_curve(m);
  VersalPoint<RadicalNumber> p{m, {}, {}};
  for (const auto& a : curve.alpha) p.alpha.push_back(a.eval(RadicalNumber(t)));
  for (const auto& b : curve.beta) p.beta.push_back(b.eval(RadicalNumber(t)));
  return p;
}

MultiPoly swallowtail_expected() {
  MultiPoly a0 = MultiPoly::variable("a0"), b0 = MultiPoly::variable("b0"), b1 = MultiPoly::variable("b1");
  MultiPoly inner = a0.pow(3) * b1.pow(2) * 16 + a0.pow(2) * b0.pow(2) * 16 - a0 * b0 * b1.pow(2) * 72 -
                    b1.pow(4) * 27 - b0.pow(3) * 64;
  return (inner * 256).with_vars({"a0", "b0", "b1"});
}

MultiPoly swallowtail() {
  MultiPoly x = MultiPoly::variable("x"), a0 = MultiPoly::variable("a0"), b0 = MultiPoly::variable("b0"),
            b1 = MultiPoly::variable("b1");
  MultiPoly f = (x.pow(2) + a0).pow(2) - (b1 * x + b0) * 4;
  MultiPoly disc = discriminant(f, "x").with_vars({"a0", "b0", "b1"});
  if (!(disc == swallowtail_expected()))
    throw InternalInconsistency("swallowtail: discriminant " + disc.str() + " does not match the expected form");
  return disc;
}

bool cusp_locus_verify() {
  MultiPoly u = MultiPoly::variable("u");
  MultiPoly a0 = u.pow(2) * -3, b1 = u.pow(3) * -2, b0 = u.pow(4) * 3;
  MultiPoly zero;

  // The parametrization solves the tangency system it comes from.
  if (!(a0 * 2 + u.pow(2) * 6 == zero)) return false;
  if (!(b1 * -4 - u.pow(3) * 8 == zero)) return false;
  if (!(a0.pow(2) - b0 * 4 + u.pow(4) * 3 == zero)) return false;

  MultiPoly g1 = MultiPoly::variable("a0").pow(2) - MultiPoly::variable("b0") * 3;
  MultiPoly g2 = MultiPoly::variable("a0").pow(3) * 4 + MultiPoly::variable("b1").pow(2) * 27;
  auto on_curve = [&](const MultiPoly& g) {
    return g.substitute("a0", a0).substitute("b0", b0).substitute("b1", b1);
  };
  if (!(on_curve(g1) == zero) || !(on_curve(g2) == zero)) return false;
  if (!(on_curve(swallowtail_expected()) == zero)) return false;

  for (Rational s : {Rational(0), Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
    std::map<std::string, Rational> point{{"a0", -3 * s * s}, {"b0", 3 * pow(s, 4)}, {"b1", -2 * pow(s, 3)}};
    if (g1.evaluate(point) != 0 || g2.evaluate(point) != 0) return false;
  }
  return true;
}

std::vector<IdentityRow> chebyshev_identity_check(int l) {
  if (l < 1) throw std::invalid_argument("chebyshev_identity_check: l must be >= 1");
  const QPoly one = QPoly::constant(1), x = QPoly({0, 1});
  const QPoly Te = chebyshev(ChebyshevKind::T, 2 * l), To = chebyshev(ChebyshevKind::T, 2 * l + 1);
  const QPoly Tl = chebyshev(ChebyshevKind::T, l);
  const QPoly Ul = chebyshev(ChebyshevKind::U, l), Ulm = chebyshev(ChebyshevKind::U, l - 1);
  const QPoly Vl = chebyshev(ChebyshevKind::V, l), Wl = chebyshev(ChebyshevKind::W, l);
  const QPoly x2m1 = x * x - one;
  const std::string L = std::to_string(l), E = std::to_string(2 * l), O = std::to_string(2 * l + 1);

  auto row = [](std::string name, bool expected, const QPoly& lhs, const QPoly& rhs) {
    QPoly r = lhs - rhs;
    return IdentityRow{std::move(name), expected, r.is_zero(), r};
  };
  return {
      row("T_" + E + " + 1 = 2 T_" + L + "^2", true, Te + one, (Tl * Tl).scaled(2)),
      row("T_" + E + " - 1 = 2(x^2 - 1) U_" + std::to_string(l - 1) + "^2", true, Te - one,
          (x2m1 * Ulm * Ulm).scaled(2)),
      row("T_" + E + " - 1 = 2(x^2 - 1) U_" + L + "^2", false, Te - one, (x2m1 * Ul * Ul).scaled(2)),
      row("T_" + O + " + 1 = (x + 1) V_" + L + "^2", true, To + one, (x + one) * Vl * Vl),
      row("T_" + O + " - 1 = (x - 1) W_" + L + "^2", true, To - one, (x - one) * Wl * Wl),
  };
}

}  // namespace severi
