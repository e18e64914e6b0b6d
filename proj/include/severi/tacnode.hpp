// The versal deformation of the m-tacnode y(y + x^m) = 0.
//
// Writing the deformed curve as y^2 + y(x^m + alpha_{m-2} x^{m-2} + ... + alpha_0)
// + (beta_{m-1} x^{m-1} + ... + beta_0) = 0, its projection to the x-axis is a
// double cover branched where
//   delta(x) = (x^m + alpha_{m-2} x^{m-2} + ... + alpha_0)^2 - 4(beta_{m-1} x^{m-1} + ... + beta_0)
// vanishes. Nodes of the fibre sit over the double roots of delta.
#pragma once

#include "severi/poly/multipoly.hpp"
#include "severi/poly/unipoly.hpp"
#include "severi/radical.hpp"

#include <string>
#include <vector>

namespace severi {

template <class F>
struct VersalPoint {
  int m = 2;
  std::vector<F> alpha;  // alpha_0 .. alpha_{m-2}
  std::vector<F> beta;   // beta_0 .. beta_{m-1}

  /// Throws std::invalid_argument unless m >= 2 and the lengths are m-1, m.
  void validate() const {
    if (m < 2) throw std::invalid_argument("tacnode order m must be >= 2");
    if (alpha.size() != static_cast<std::size_t>(m - 1) || beta.size() != static_cast<std::size_t>(m))
      throw std::invalid_argument("versal point for m=" + std::to_string(m) + " needs " + std::to_string(m - 1) +
                                  " alpha and " + std::to_string(m) + " beta coordinates");
  }
};

template <class F>
UniPoly<F> fiber_discriminant(const VersalPoint<F>& p) {
  p.validate();
  std::vector<F> a(p.alpha);
  a.push_back(F(0));  // x^{m-1}
  a.push_back(F(1));  // x^m
  std::vector<F> b;
  for (const F& v : p.beta) b.push_back(v * F(4));
  UniPoly<F> top(std::move(a));
  UniPoly<F> delta = top * top - UniPoly<F>(std::move(b));
  if (delta.degree() != 2 * p.m || !(delta.lc() == F(1)) || !(delta[2 * p.m - 1] == F(0)))
    throw InternalInconsistency("fiber_discriminant: result is not monic of degree 2m without an x^{2m-1} term");
  return delta;
}

struct NodeProfile {
  int double_roots = 0;
  /// Some root of delta has multiplicity >= 3: the fibre is not nodal.
  bool worse = false;
  bool operator==(const NodeProfile&) const = default;
  std::string str() const { return "(" + std::to_string(double_roots) + ", " + (worse ? "true" : "false") + ")"; }
};

template <class F>
NodeProfile profile_of(const UniPoly<F>& f) {
  NodeProfile r;
  for (const SquarefreePart& part : squarefree_profile(f)) {
    if (part.multiplicity == 2) r.double_roots = part.degree;
    if (part.multiplicity >= 3) r.worse = true;
  }
  return r;
}

template <class F>
NodeProfile node_profile(const VersalPoint<F>& p) {
  return profile_of(fiber_discriminant(p));
}

/// The monic, x^{m-1}-free polynomial gamma * T_m(x / u) with u^m = 2^{m-1} gamma,
/// whose shifts nu +- gamma carry the double roots of T_m +- 1. Requires u^2
/// rational for even m and u rational for odd m; otherwise std::invalid_argument.
/// Checks the double-root profiles of nu +- gamma and c_{m-2} != 0.
UniPoly<Rational> nu_gamma(int m, const Rational& gamma);

/// The curve t -> (alpha(t), beta(t)) through the origin of the versal space
/// along which the fibre has m-1 nodes for t != 0. Coordinates are
/// polynomials in t over Q(2^{1/m}).
struct PsiCurve {
  int m;
  std::vector<UniPoly<RadicalNumber>> alpha;
  std::vector<UniPoly<RadicalNumber>> beta;
};

PsiCurve psi_curve(int m);
VersalPoint<RadicalNumber> psi_point(int m, const Rational& t);

/// Disc_x((x^2 + a0)^2 - 4(b1 x + b0)) over the variables a0, b0, b1; throws
/// InternalInconsistency if it differs from swallowtail_expected().
MultiPoly swallowtail();
/// 256 (16 a0^3 b1^2 + 16 a0^2 b0^2 - 72 a0 b0 b1^2 - 27 b1^4 - 64 b0^3)
MultiPoly swallowtail_expected();

/// Substitutes a0 = -3u^2, b1 = -2u^3, b0 = 3u^4 into the cusp-locus
/// generators a0^2 - 3 b0 and 4 a0^3 + 27 b1^2 and into the swallowtail, and
/// evaluates them at sample values of u. True when everything vanishes.
bool cusp_locus_verify();

enum class ChebyshevKind { T, U, V, W };
/// Throws std::invalid_argument for an unknown letter.
ChebyshevKind parse_chebyshev_kind(const std::string& letter);

/// P_{n+1} = 2x P_n - P_{n-1}, P_0 = 1, P_1 = x, 2x, 2x - 1, 2x + 1.
UniPoly<Rational> chebyshev(ChebyshevKind kind, int n);

struct IdentityRow {
  std::string name;     // e.g. "T_4 + 1 = 2 T_2^2"
  bool expected;        // whether the identity should hold
  bool holds;
  UniPoly<Rational> residual;  // lhs - rhs
};

/// The square identities for T_{2l} +- 1 and T_{2l+1} +- 1, including the
/// variant of T_{2l} - 1 with U_l, which is expected to fail.
std::vector<IdentityRow> chebyshev_identity_check(int l);

}  // namespace severi
