// This file is part of hydroc, released under the MIT License.
//
// Times the sweep kernels (functional and direct-oracle measures over a
// circular-state grid) with the serial reference loop against the OpenMP
// path, and checks that the two produce bit-identical rows.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hydroc/complexity.hpp"
#include "hydroc/grid.hpp"

using namespace hydroc;

namespace {

struct Point {
  StateSpec spec;
  Space space;
  Method method;
};

std::vector<Point> build_grid(int d_max, int n_max) {
  std::vector<Point> grid;
  for (int D = 2; D <= d_max; ++D) {
    for (int n = 1; n <= n_max; ++n) {
      for (Space space : {Space::position, Space::momentum}) {
        for (Method m : {Method::functional, Method::direct_oracle}) {
          grid.push_back({StateSpec::circular(n, D), space, m});
        }
      }
    }
  }
  return grid;
}

double run(const std::vector<Point>& grid, bool parallel,
           std::vector<MeasureReport>& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = grid_map<MeasureReport>(grid.size(), parallel, [&](std::size_t i) {
    return measure(grid[i].spec, grid[i].space, grid[i].method);
  });
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int d_max = 7;
  int n_max = 4;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--small") == 0) {
      d_max = 4;
      n_max = 2;
    }
  }

  const auto grid = build_grid(d_max, n_max);
  std::printf("grid: %zu measure evaluations (D<=%d, n<=%d, both spaces, "
              "functional + oracle)\n",
              grid.size(), d_max, n_max);
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both runs are serial\n");
#endif

  std::vector<MeasureReport> serial, parallel;
  const double ts = run(grid, false, serial);
  const double tp = run(grid, true, parallel);

  const auto same = [](const MeasureReport& a, const MeasureReport& b) {
    // field-wise: padding bytes make memcmp unreliable
    return a.space == b.space && a.method == b.method &&
           a.disequilibrium == b.disequilibrium &&
           a.entropy_radial == b.entropy_radial &&
           a.entropy_angular == b.entropy_angular &&
           a.entropy_total == b.entropy_total &&
           a.complexity == b.complexity &&
           a.log_disequilibrium == b.log_disequilibrium &&
           a.log_complexity == b.log_complexity &&
           a.error_estimate == b.error_estimate && a.converged == b.converged;
  };
  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i) {
    identical = same(serial[i], parallel[i]);
  }

  std::printf("serial   %8.3f s\n", ts);
  std::printf("parallel %8.3f s   speedup %.2fx\n", tp, ts / tp);
  std::printf("results bit-identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
