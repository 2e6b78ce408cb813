// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>

#include "hurwitz/acceptance.hpp"

using namespace hurwitz;

int main() {
  int failed = 0;
  for (int k = 1; k <= kCriteria; ++k) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
      for (const auto& r : run_criterion(k)) {
        // A report that compared nothing proves nothing.
        const bool good = r.passed && r.comparisons > 0;
        if (!good && ok) detail = r.to_jsonl();
        ok = ok && good;
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %-26s %s (%.1fs)\n", k, criterion_title(k), ok ? "PASS" : "FAIL", secs);
    if (!ok) std::printf("  %s\n", detail.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
