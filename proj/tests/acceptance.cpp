#include <cstdlib>
#include <iostream>

#include "territoire/selfcheck.hpp"

int main() {
  auto verdicts = territoire::run_selfcheck(territoire::Budgets::from_environment());
  bool all = true;
  for (const auto& v : verdicts) {
    std::cout << "criterion " << v.id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.name << " (" << v.detail
              << ")\n";
    all = all && v.pass;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
