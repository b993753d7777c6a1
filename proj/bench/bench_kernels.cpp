// Times the serial and OpenMP search kernels on fixed workloads and checks
// that both paths return identical answers.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "vecram/dodge.hpp"
#include "vecram/search.hpp"

namespace {

int failures = 0;

template <typename F>
auto timed(const char* label, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  auto out = body();
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::printf("  %-10s %9.2f ms\n", label, ms);
  return out;
}

void check(bool ok, const std::string& what) {
  if (!ok) {
    std::printf("  MISMATCH: %s\n", what.c_str());
    ++failures;
  }
}

std::string show(const vecram::ExhaustiveVerdict& v) {
  std::string s = v.holds ? "holds" : "refuted";
  s += " over " + std::to_string(v.total);
  if (v.least_failing) s += ", least failing " + std::to_string(*v.least_failing);
  return s;
}

}  // namespace

int main() {
  omp_set_num_threads(4);
  std::printf("search kernels, serial vs %d threads\n\n", omp_get_max_threads());

  std::printf("subset-sum exhaustion, GF(2)^4, length 2, 2 colours\n");
  vecram::Field f2 = vecram::Field::make(2);
  auto hs = timed("serial", [&] {
    return vecram::hindman_exhaustive(f2, 4, 2, 2, {}, false);
  });
  auto hp = timed("parallel", [&] {
    return vecram::hindman_exhaustive(f2, 4, 2, 2, {}, true);
  });
  check(hs.holds == hp.holds && hs.total == hp.total &&
            hs.least_failing == hp.least_failing,
        "subset-sum verdicts differ");
  std::printf("  verdict: %s\n\n", show(hs).c_str());

  std::printf("progression exhaustion, interval 16, length 3, 2 colours\n");
  auto vs = timed("serial", [&] {
    return vecram::vdw_exhaustive(16, 3, 2, {}, false);
  });
  auto vp = timed("parallel", [&] {
    return vecram::vdw_exhaustive(16, 3, 2, {}, true);
  });
  check(vs.holds == vp.holds && vs.total == vp.total &&
            vs.least_failing == vp.least_failing,
        "progression verdicts differ");
  std::printf("  verdict: %s\n\n", show(vs).c_str());

  std::printf("collinearity scan over a 150-line dodging set\n");
  vecram::DodgeSet set = vecram::dodge_lines(2, 150);
  std::printf("  points: %zu\n", set.points.size());
  auto cs = timed("serial", [&] {
    return vecram::first_collinear_triple(set.points, false);
  });
  auto cp = timed("parallel", [&] {
    return vecram::first_collinear_triple(set.points, true);
  });
  check(cs == cp, "collinearity scans differ");
  check(!cs, "dodging set contains a collinear triple");
  std::printf("  clean: %s\n\n", cs ? "no" : "yes");

  if (failures) {
    std::printf("%d mismatch(es)\n", failures);
    return 1;
  }
  std::printf("serial and parallel kernels agree\n");
  return 0;
}
