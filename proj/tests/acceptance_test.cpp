#include <cstdlib>
#include <cstring>
#include <iostream>

#include "weinstein/acceptance.hpp"

// Runs every acceptance criterion and prints one line per criterion.
// Pass --quick for the reduced trial counts.
int main(int argc, char** argv) {
  weinstein::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
  }
  int failed = 0;
  for (int id = 1; id <= weinstein::kCriterionCount; ++id) {
    const auto result = weinstein::run_criterion(id, options);
    std::cout << weinstein::format_result(result) << std::endl;
    if (!result.passed) ++failed;
  }
  std::cout << (weinstein::kCriterionCount - failed) << "/" << weinstein::kCriterionCount << " criteria passed"
            << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
