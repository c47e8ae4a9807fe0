#include <cstdio>
#include <cstdlib>
#include <string>

#include "holo/acceptance.hpp"

// one line per criterion; nonzero exit if any fails
int main(int argc, char** argv) {
  std::uint64_t seed = holo::kAcceptanceSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (int id = 1; id <= holo::kCriteria; ++id) {
    auto r = holo::run_criterion(id, seed);
    if (!r.pass) ++failed;
    std::printf("criterion %2d %s  %-46s %7.2fs  %s\n", r.id, r.pass ? "PASS" : "FAIL", r.label.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria pass\n", holo::kCriteria - failed, holo::kCriteria);
  return failed ? 1 : 0;
}
