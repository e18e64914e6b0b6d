#include "severi/irreducible.hpp"
#include "severi/table.hpp"

#include <doctest.h>
#include <omp.h>

using namespace severi;

namespace {

void require_same(const CountTable& a, const CountTable& b) {
  REQUIRE(a.size() == b.size());
  for (const auto& e : a.entries()) {
    auto v = b.find(e.key, e.irreducible);
    REQUIRE(v.has_value());
    CHECK(*v == e.value);
  }
}

}  // namespace

TEST_CASE("all_keys") {
  // d=1: alpha+beta = [1] split two ways, delta = 0 only.
  CHECK(all_keys(1).size() == 2);
  for (int d = 1; d <= 5; ++d)
    for (const SeveriKey& k : all_keys(d)) {
      CHECK(k.d == d);
      CHECK(k.alpha.weight() + k.beta.weight() == d);
      CHECK(k.delta >= 0);
      CHECK(k.delta <= max_nodes(d));
    }
  for (const SeveriKey& k : all_keys(4, true)) CHECK(k.delta <= arithmetic_genus(4));
}

TEST_CASE("parallel build matches the serial reference") {
  for (bool irr : {false, true}) {
    CAPTURE(irr);
    CountTable serial;
    build_table_serial(5, irr, serial);
    for (int threads : {1, 2, 4}) {
      CAPTURE(threads);
      omp_set_num_threads(threads);
      CountTable parallel;
      build_table_parallel(5, irr, parallel);
      require_same(serial, parallel);
    }
  }
}

TEST_CASE("table entries agree with direct evaluation") {
  CountTable table;
  build_table_parallel(4, false, table);
  CHECK(table.find(make_key(4, 3, Tally(), Tally({4})), false) == BigCount(675));
  CHECK(table.find(make_key(4, 2, Tally({4}), Tally()), false) == BigCount(172));
  CountTable irr;
  build_table_parallel(4, true, irr);
  CHECK(irr.find(make_key(4, 3, Tally({3}), Tally({1})), true) == BigCount(584));
}
