// Runs the 17 acceptance criteria; one line per criterion, nonzero exit if any fails.
#include "vk/regress.hpp"

#include <cstdio>

int main() {
  int failed = 0;
  for (const auto& r : vk::run_suite(vk::Suite::all)) {
    std::printf("%s %2d %s (%.2f s): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    failed += !r.pass;
  }
  std::printf("%d of 17 criteria pass\n", 17 - failed);
  return failed == 0 ? 0 : 1;
}
