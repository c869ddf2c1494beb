#include <CLI11.hpp>

#include <iostream>

#include "migs/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  migs::AcceptanceOptions options;
  app.add_option("--threads", options.threads);
  app.add_option("--seed", options.seed);
  CLI11_PARSE(app, argc, argv);
  const auto results = migs::run_acceptance(options);
  migs::print_acceptance(std::cout, results);
  for (const auto& r : results) {
    if (!r.passed) return 1;
  }
  return 0;
}
