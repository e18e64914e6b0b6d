#include "severi/poly/sylvester.hpp"

namespace severi {

namespace {

std::vector<MultiPoly> coefficients_high_first(const MultiPoly& f, const std::string& var) {
  std::vector<MultiPoly> out;
  for (int k = f.degree_in(var); k >= 0; --k) out.push_back(f.coefficient_in(var, k));
  return out;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  const MultiPoly zero, one = MultiPoly::constant(1);
  MultiPoly r = bareiss_determinant<MultiPoly>(
      sylvester_matrix(coefficients_high_first(f, var), coefficients_high_first(g, var), zero), zero, one,
      detail::multipoly_div_exact);
  return r.index_of(var) < 0 ? r : r.with_vars([&] {
    std::vector<std::string> rest;
    for (const std::string& v : r.vars())
      if (v != var) rest.push_back(v);
    return rest;
  }());
}

MultiPoly discriminant(const MultiPoly& f, const std::string& var) {
  const int n = f.degree_in(var);
  if (n < 1) throw std::invalid_argument("discriminant: degree in " + var + " must be >= 1");
  MultiPoly lc = f.coefficient_in(var, n);
  auto q = resultant(f, f.derivative(var), var).divide_exact(lc);
  if (!q) throw InternalInconsistency("discriminant: leading coefficient does not divide the resultant");
  return (n * (n - 1) / 2) % 2 ? -*q : *q;
}

}  // namespace severi
