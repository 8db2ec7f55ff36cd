// Timing comparison of the serial reference kernels against the
// OpenMP-parallel ones: the Hurwitz class number sieve, the r3 sieve, and a
// lattice-count sweep. The serial versions stay in the library as the
// reference implementations the tests pin the parallel ones to.
#include <omp.h>

#include <cstdio>

#include "coreforms/abacus.hpp"
#include "coreforms/class_numbers.hpp"
#include "coreforms/three_squares.hpp"

using namespace coreforms;

namespace {

template <class F>
double time_run(F&& fn) {
  double t0 = omp_get_wtime();
  fn();
  return omp_get_wtime() - t0;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-34s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  long long hmax = 400000, r3max = 200000, sweep = 4000;
  if (argc > 1) hmax = std::atoll(argv[1]);
  if (argc > 2) r3max = std::atoll(argv[2]);
  if (argc > 3) sweep = std::atoll(argv[3]);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  int64_t sink = 0;

  {
    class_numbers::HurwitzTable ts, tp;
    double s = time_run([&] { ts = class_numbers::HurwitzTable::build_serial(hmax); });
    double p = time_run([&] { tp = class_numbers::HurwitzTable::build_parallel(hmax); });
    report("hurwitz table (12H sieve)", s, p);
    if (ts.twelve_h != tp.twelve_h) {
      std::printf("MISMATCH between serial and parallel Hurwitz tables\n");
      return 1;
    }
    sink += ts.twelve(hmax - hmax % 4);
  }

  {
    three_squares::R3Table ts, tp;
    double s = time_run([&] { ts = three_squares::R3Table::build_serial(r3max); });
    double p = time_run([&] { tp = three_squares::R3Table::build_parallel(r3max); });
    report("r3 table", s, p);
    if (ts.counts != tp.counts) {
      std::printf("MISMATCH between serial and parallel r3 tables\n");
      return 1;
    }
    sink += ts.at(r3max);
  }

  {
    std::vector<long long> serial_counts(static_cast<size_t>(sweep) + 1);
    std::vector<long long> parallel_counts(static_cast<size_t>(sweep) + 1);
    double s = time_run([&] {
      for (long long n = 0; n <= sweep; ++n)
        serial_counts[static_cast<size_t>(n)] =
            abacus::count_sc_t_cores_lattice(n, 7);
    });
    double p = time_run([&] {
#pragma omp parallel for schedule(dynamic, 32)
      for (long long n = 0; n <= sweep; ++n)
        parallel_counts[static_cast<size_t>(n)] =
            abacus::count_sc_t_cores_lattice(n, 7);
    });
    report("sc7 lattice sweep", s, p);
    if (serial_counts != parallel_counts) {
      std::printf("MISMATCH in sc7 sweep\n");
      return 1;
    }
    sink += serial_counts[static_cast<size_t>(sweep)];
  }

  std::printf("checksum %lld\n", static_cast<long long>(sink));
  return 0;
}
