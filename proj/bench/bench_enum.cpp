// Compares the parallel short-vector enumerator against the serial
// reference on definite lattices of growing norm budget. The reference is a
// full box scan, so the bench sticks to lattices whose dual diagonal keeps
// that box affordable; pass a max norm as argv[1] (default 8).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <tuple>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wallkit/enumerate.hpp"
#include "wallkit/reference.hpp"

using namespace wallkit;

namespace {

double run_ms(const std::function<std::vector<LatticeVector>()>& f, size_t& count) {
  auto t0 = std::chrono::steady_clock::now();
  auto out = f();
  auto t1 = std::chrono::steady_clock::now();
  count = out.size();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long max_norm = argc > 1 ? std::atol(argv[1]) : 8;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  auto a2 = standard_lattice("A2");
  auto a2n = standard_lattice("A2(-1)");
  auto pos = direct_sum({a2, a2, a2, a2}, "A2^4");
  auto neg = direct_sum({a2n, a2n, a2n, a2n}, "A2(-1)^4");

  std::printf("short-vector enumeration, %d thread(s) for the parallel kernel\n", threads);
  std::printf("%-10s %6s %10s %12s %12s %8s\n", "lattice", "norm", "vectors", "parallel_ms",
              "serial_ms", "speedup");
  for (long m = 2; m <= max_norm; m += 2) {
    for (const auto& [label, l, sign] :
         {std::tuple{"A2^4", pos, 1}, std::tuple{"A2(-1)^4", neg, -1}}) {
      Int target = Int(sign * m);
      size_t np = 0, ns = 0;
      double tp = run_ms([&] { return short_vectors(l, target); }, np);
      double ts = run_ms([&] { return short_vectors_reference(l, target); }, ns);
      if (np != ns) {
        std::fprintf(stderr, "MISMATCH at %s norm %ld: %zu vs %zu\n", label, m, np, ns);
        return 1;
      }
      std::printf("%-10s %6ld %10zu %12.2f %12.2f %7.2fx\n", label, sign * m, np, tp, ts,
                  tp > 0 ? ts / tp : 0.0);
    }
  }
  return 0;
}
