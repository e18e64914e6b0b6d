// Serial reference versus the level-parallel table build.
//
//   bench_table [max_d] [--irr]
#include "severi/table.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

using namespace severi;

namespace {

template <class F>
double seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_d = 7;
  bool irr = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--irr") == 0)
      irr = true;
    else
      max_d = std::atoi(argv[i]);
  }
  if (max_d < 1) {
    std::fprintf(stderr, "usage: bench_table [max_d >= 1] [--irr]\n");
    return 2;
  }

  CountTable serial;
  double ts = seconds([&] { build_table_serial(max_d, irr, serial); });
  std::printf("%-10s threads=%-3d entries=%-8zu %.3f s\n", "serial", 1, serial.size(), ts);

  const int max_threads = omp_get_max_threads();
  for (int threads = 1; threads <= max_threads; threads *= 2) {
    omp_set_num_threads(threads);
    CountTable parallel;
    double tp = seconds([&] { build_table_parallel(max_d, irr, parallel); });
    bool same = parallel.size() == serial.size();
    for (const auto& e : serial.entries())
      if (!same || parallel.find(e.key, e.irreducible) != e.value) {
        same = false;
        break;
      }
    std::printf("%-10s threads=%-3d entries=%-8zu %.3f s  speedup %.2fx%s\n", "parallel", threads, parallel.size(), tp,
                ts / tp, same ? "" : "  MISMATCH");
    if (!same) return 1;
  }
  return 0;
}
