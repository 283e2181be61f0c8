// Benchmark comparing the OpenMP kernels with their serial reference
// implementations: reflection closure, the verification pair sweep, and
// the classification sweep over the full rank-9 enumeration.  Thread count
// comes from OMP_NUM_THREADS.

#include "cartan/classify.hpp"
#include "cartan/enumerate.hpp"
#include "cartan/minors.hpp"
#include "cartan/notation.hpp"
#include "cartan/roots.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cartan;
using Clock = std::chrono::steady_clock;

namespace {

double run(const char* label, const std::function<void()>& body) {
  auto t0 = Clock::now();
  body();
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("  %-38s %8.3f s\n", label, dt);
  return dt;
}

CoxeterDiagram star(int a, int b, int c) {
  int l = a + b + c + 1;
  CoxeterDiagram d(l);
  int next = 0, node = l - 1;
  auto add_branch = [&](int len) {
    int prev = -1;
    for (int i = 0; i < len; ++i) {
      if (prev >= 0) d.add_edge(prev, next, 1);
      prev = next++;
    }
    if (len > 0) d.add_edge(prev, node, 1);
  };
  add_branch(a);
  add_branch(b);
  add_branch(c);
  return d;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif

  CartanMatrix e8 = orient(star(4, 2, 1), {});
  std::printf("E8 root system (240 roots):\n");
  RootSystem sys = generate_roots(e8);
  double closure_par = run("closure, frontier-parallel", [&] {
    for (int i = 0; i < 20; ++i) generate_roots(e8);
  });
  double closure_ser = run("closure, serial reference", [&] {
    for (int i = 0; i < 20; ++i) generate_roots_serial(e8);
  });
  double verify_par = run("verification pair sweep, parallel", [&] { verify_root_system(sys); });
  double verify_ser =
      run("verification pair sweep, serial", [&] { verify_root_system_serial(sys); });

  std::printf("rank <= 9 enumeration sweep:\n");
  auto diagrams = enumerate_connected(9, false);
  std::vector<ClassificationResult> results(diagrams.size());
  const auto n = static_cast<long long>(diagrams.size());
  double classify_par = run("classification, parallel", [&] {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < n; ++i) results[i] = classify_connected(diagrams[i]);
  });
  double classify_ser = run("classification, serial", [&] {
    for (long long i = 0; i < n; ++i) results[i] = classify_connected(diagrams[i]);
  });
  double oracle_par = run("Sylvester oracle, parallel", [&] {
    std::vector<char> pd(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < n; ++i)
      pd[i] = sylvester_pd(diagrams[i].sym_matrix()).positive_definite;
  });

  std::printf("speedups (serial / parallel): closure %.2fx, verify %.2fx, classify %.2fx\n",
              closure_ser / closure_par, verify_ser / verify_par, classify_ser / classify_par);
  (void)oracle_par;
  return 0;
}
