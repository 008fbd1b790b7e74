// Wall-clock comparison of the OpenMP kernels against their serial references.
//
//   qweyl_bench [repeats]
//
// Set OMP_NUM_THREADS to control the parallel side.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "qweyl/opalg.hpp"
#include "qweyl/verify.hpp"

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-34s %12.2f %12.2f %8.2fx  %s\n", name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
              agree ? "same" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qweyl;
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

  const QScalar q = QScalar::q();
  for (int n : {12, 16, 24}) {
    const NormalOp half = power(affine_factor(1, q), n / 2);
    NormalOp a(q), b(q);
    const double s = best_of(repeats, [&] { a = serial::mul(half, half); });
    const double p = best_of(repeats, [&] { b = mul(half, half); });
    row("mul (X+sD_q)^" + std::to_string(n / 2) + " squared", s, p, a == b);
  }

  std::vector<CaseId> ids;
  for (const auto& info : all_cases()) ids.push_back(info.id);
  std::vector<VerificationReport> rs, rp;
  const double s = best_of(repeats, [&] { rs = serial::run_suite(ids); });
  const double p = best_of(repeats, [&] { rp = run_suite(ids); });
  bool agree = rs.size() == rp.size();
  for (std::size_t i = 0; agree && i < rs.size(); ++i) agree = rs[i].pass == rp[i].pass;
  row("full verification suite", s, p, agree);
  return agree ? 0 : 1;
}
