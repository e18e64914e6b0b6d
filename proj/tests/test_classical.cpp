#include "severi/classical.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace severi;

TEST_CASE("salmon examples") {
  CHECK(salmon(4).triple_points == 3200);
  CHECK(salmon(3).triple_points == 45);
  CHECK(salmon(3).dual == 12);
  SalmonDegrees q = salmon(2);
  CHECK(q.dual == 2);
  CHECK(q.bitangent_curve == 0);
  CHECK(q.cuspidal_curve == 0);
  CHECK(q.parabolic_curve == 0);
  CHECK(q.triple_points == 0);
  // Cubic surface, closed forms worked by hand.
  CHECK(salmon(3).parabolic_curve == 12);
  CHECK(salmon(3).cuspidal_curve == 24);
  CHECK(salmon(3).bitangent_curve == 27);
}

TEST_CASE("triple point count times six is the degree-9 polynomial") {
  for (long d = 2; d <= 20; ++d) {
    CAPTURE(d);
    BigCount D = d;
    BigCount p = D * D * D * D * D * D * D - 4 * D * D * D * D * D * D + 7 * D * D * D * D * D - 45 * D * D * D * D +
                 114 * D * D * D - 111 * D * D + 548 * D - 960;
    CHECK(6 * salmon(d).triple_points == D * (D - 2) * p);
    SalmonDegrees s = salmon(d);
    CHECK(s.dual >= 0);
    CHECK(s.bitangent_curve >= 0);
    CHECK(s.cuspidal_curve >= 0);
    CHECK(s.parabolic_curve >= 0);
    CHECK(s.triple_points >= 0);
  }
  CHECK_THROWS_AS(salmon(1), std::invalid_argument);
  CHECK_THROWS_AS(salmon(-3), std::invalid_argument);
}

TEST_CASE("limit dual check") {
  DualCheck a = limit_dual_check(4, 2);
  CHECK(a.lhs == 36);
  CHECK(a.rhs == 36);
  CHECK(a.equal);
  DualCheck b = limit_dual_check(4, 1);
  CHECK(b.lhs == 36);
  CHECK(b.equal);
  for (long d = 2; d <= 12; ++d)
    for (long h = 1; h <= d - 1; ++h) {
      CAPTURE(d);
      CAPTURE(h);
      DualCheck c = limit_dual_check(d, h);
      CHECK(c.equal);
      CHECK(c.rhs == salmon(d).dual);
    }
  CHECK_THROWS_AS(limit_dual_check(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(limit_dual_check(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(limit_dual_check(1, 1), std::invalid_argument);
}

TEST_CASE("triple point formula") {
  NCConfig a;
  a.self_q = 1;
  a.self_q_prime = -1;
  CHECK(triple_point_check(a).residual == 0);
  CHECK(triple_point_check(a).valid);

  NCConfig b;
  b.self_q_prime = -3;
  b.others = {{1, 3}};
  CHECK(triple_point_check(b).residual == 0);
  CHECK(triple_point_check(b).valid);

  NCConfig c;
  c.m = 2;
  c.self_q = -1;
  c.self_q_prime = 1;
  c.others = {{1, 1}};
  CHECK(triple_point_check(c).residual == 2);
  CHECK_FALSE(triple_point_check(c).valid);
}

TEST_CASE("triple point formula is symmetric in the two sides") {
  for (long m = 1; m <= 3; ++m)
    for (long mp = 1; mp <= 3; ++mp)
      for (long s = -3; s <= 3; ++s)
        for (long sp = -3; sp <= 3; ++sp) {
          NCConfig x;
          x.m = m;
          x.m_prime = mp;
          x.self_q = s;
          x.self_q_prime = sp;
          x.others = {{2, 1}, {1, 4}};
          NCConfig y = x;
          std::swap(y.m, y.m_prime);
          std::swap(y.self_q, y.self_q_prime);
          CHECK(triple_point_check(x).residual == triple_point_check(y).residual);
          CHECK(triple_point_check(x).valid == triple_point_check(y).valid);
        }
}
