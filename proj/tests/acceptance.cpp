#include <cstdio>

#include "permx/selftest.hpp"

int main() {
  const auto results = permx::selftest::run_all(0, [](const permx::selftest::CriterionResult& r) {
    std::printf("%s %2d %-28s %7.2fs (limit %.0fs)  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.limit_seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass;
  std::printf("%zu/%zu criteria pass\n", passed, results.size());
  return permx::selftest::all_pass(results) ? 0 : 1;
}
