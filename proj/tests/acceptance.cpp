// Acceptance gate: one line per criterion, nonzero exit if any check fails.

#include "symidx/verify.hpp"

#include <chrono>
#include <cstdio>

int main() {
  using namespace symidx;
  const auto start = std::chrono::steady_clock::now();
  const auto outcomes = run_verification();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  for (int c = 1; c <= kCriteria; ++c) {
    int total = 0, passed = 0;
    for (const auto& o : outcomes) {
      if (o.criterion != c) continue;
      ++total;
      if (o.status == Status::pass) {
        ++passed;
      } else {
        std::printf("  FAIL %s: expected %s, got %s\n", o.name.c_str(), o.expected.c_str(), o.actual.c_str());
      }
    }
    const bool ok = total > 0 && passed == total;
    all = all && ok;
    std::printf("criterion %d %s: %s (%d/%d checks)\n", c, ok ? "PASS" : "FAIL", criterion_title(c), passed, total);
  }
  const bool fast = seconds < 30.0;
  std::printf("suite time %.2f s (%s, limit 30 s)\n", seconds, fast ? "PASS" : "FAIL");
  return all && fast ? 0 : 1;
}
