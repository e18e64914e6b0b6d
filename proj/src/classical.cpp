#include "severi/classical.hpp"

#include <stdexcept>
#include <string>

namespace severi {

SalmonDegrees salmon(long d) {
  if (d < 2) throw std::invalid_argument("salmon: degree must be >= 2, got " + std::to_string(d));
  const BigCount D = d;
  SalmonDegrees s;
  s.dual = D * (D - 1) * (D - 1);
  s.bitangent_curve = exact_div(D * (D - 1) * (D - 2) * (D * D * D - D * D + D - 12), 2, "bitangent degree");
  s.cuspidal_curve = 4 * D * (D - 1) * (D - 2);
  s.parabolic_curve = 4 * D * (D - 2);
  BigCount p = 0;
  for (long c : {1L, -4L, 7L, -45L, 114L, -111L, 548L, -960L}) p = p * D + c;  // Horner, d^7 .. d^0
  s.triple_points = exact_div(D * (D - 2) * p, 6, "triple point count");
  return s;
}

DualCheck limit_dual_check(long d, long h) {
  if (d < 2 || h < 1 || h > d - 1)
    throw std::invalid_argument("limit_dual_check: need d >= 2 and 1 <= h <= d-1, got d=" + std::to_string(d) +
                                ", h=" + std::to_string(h));
  const BigCount D = d, H = h, K = d - h;
  DualCheck c;
  if (h == 1)
    c.lhs = (D - 1) * (D - 2) * (D - 2) + D * (D - 1) + 2 * (D - 1) * (D - 2);
  else
    c.lhs = H * (H - 1) * (H - 1) + K * (K - 1) * (K - 1) + 2 * H * K * (D - 2) + D * H * K;
  c.rhs = D * (D - 1) * (D - 1);
  c.equal = c.lhs == c.rhs;
  return c;
}

TripleCheck triple_point_check(const NCConfig& cfg) {
  long r = cfg.m_prime * cfg.self_q + cfg.m * cfg.self_q_prime;
  for (const NCConfig::Other& o : cfg.others) r += o.mult * o.count;
  return {r, r == 0};
}

}  // namespace severi
