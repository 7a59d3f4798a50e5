// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <exception>

#include "modunits/verify.hpp"

int main() {
  int failed = 0;
  try {
    for (const auto& r : modunits::verify::run_suite("acceptance")) {
      std::printf("%s criterion %d (%s): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
      if (!r.passed) ++failed;
    }
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance harness: %s\n", e.what());
    return 1;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
