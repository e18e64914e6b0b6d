// Classical enumerative formulas for a general surface S of degree d in P^3.
#pragma once

#include "severi/numeric.hpp"

#include <vector>

namespace severi {

struct SalmonDegrees {
  BigCount dual;             // deg of the dual surface
  BigCount bitangent_curve;  // curve of bitangent planes
  BigCount cuspidal_curve;   // curve of cuspidal tangent planes
  BigCount parabolic_curve;  // parabolic curve on S
  BigCount triple_points;    // tritangent planes
};

/// Throws std::invalid_argument for d < 2.
SalmonDegrees salmon(long d);

struct DualCheck {
  BigCount lhs;
  BigCount rhs;
  bool equal;
};

/// Degree count for the dual of S degenerating to a union of surfaces of
/// degrees h and d - h (h >= 2), or for h = 1 to a plane plus a surface of
/// degree d - 1. Requires d >= 2 and 1 <= h <= d - 1.
DualCheck limit_dual_check(long d, long h);

/// One double curve B = Q cap Q' of a normal-crossing central fibre.
struct NCConfig {
  long m = 1;        // multiplicity of Q
  long m_prime = 1;  // multiplicity of Q'
  long self_q = 0;        // deg N_{B/Q}
  long self_q_prime = 0;  // deg N_{B/Q'}
  struct Other {
    long mult;   // multiplicity of the component
    long count;  // points of B on it
  };
  std::vector<Other> others;
};

struct TripleCheck {
  long residual;
  bool valid;
};

/// Residual of the triple point formula m' B_Q^2 + m B_Q'^2 + sum mult * count.
TripleCheck triple_point_check(const NCConfig& cfg);

}  // namespace severi
