// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include "cel/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

#ifndef CELAB_PATH
#error "CELAB_PATH must point at the celab executable"
#endif

int main(int argc, char** argv) {
  int jobs = 1;
  if (argc > 1) jobs = std::max(1, std::atoi(argv[1]));

  bool ok = true;
  for (int id = 1; id <= cel::acceptance::kCriteria; ++id) {
    const auto r = cel::acceptance::run_criterion(id, jobs);
    std::cout << cel::acceptance::format_line(r) << std::endl;
    ok = ok && r.passed;
  }

  const std::string cmd = std::string("\"") + CELAB_PATH + "\" verify --jobs " + std::to_string(jobs) + " > /dev/null";
  const int status = std::system(cmd.c_str());
  const bool verify_ok = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
  std::cout << (verify_ok ? "[PASS] " : "[FAIL] ") << "8 verify subcommand exits 0";
  if (!verify_ok) std::cout << " (status " << status << ")";
  std::cout << std::endl;
  ok = ok && verify_ok;

  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return ok ? 0 : 1;
}
