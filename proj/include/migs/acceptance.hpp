#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace migs {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  int threads = 1;
  std::uint64_t seed = 20240601;
};

/// Criteria 1..8 in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One `[PASS]`/`[FAIL]` line per criterion followed by its detail lines.
void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

/// Search summary as TSV: n, t_max, n/2 - log2 n, floor(n/2), nodes.
std::string question_table(int from, int to, int threads);

}  // namespace migs
