#include <cstdlib>
#include <iostream>

#include "recip/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& r : recip::run_acceptance(seed)) {
    std::cout << recip::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
