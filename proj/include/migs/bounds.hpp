#pragma once

#include <string>
#include <utility>
#include <vector>

#include "migs/number_theory.hpp"

namespace migs {

int divisor_count(u64 n);

/// Pairs (q, d), q a prime power and d >= 2, with (q^d - 1)/(q - 1) = n.
std::vector<std::pair<u64, int>> projective_pairs(u64 n);
/// a_n
int count_projective(u64 n);

/// Pairs (d, k) with k <= d/2 and C(d, k) = n; k starts at 2 unless
/// `include_k1`.
std::vector<std::pair<u64, int>> binomial_pairs(u64 n, bool include_k1 = false);
/// b_n
int count_binomial(u64 n, bool include_k1 = false);

/// c_n: number of k >= 2 with n a perfect k-th power, read off the gcd of the
/// prime exponents.
int count_perfect_power(u64 n);
/// c_n again, by integer k-th roots.
int count_perfect_power_by_roots(u64 n);

struct Table1Row {
  int n = 0;
  std::string group;
  int class_count = 0;
};

std::vector<Table1Row> table1_lookup(u64 n);

struct BoundReport {
  u64 n = 0;
  int delta = 0;
  int a = 0;
  int b = 0;
  int b_with_k1 = 0;
  int c = 0;
  int omega_nm1 = 0;
  /// n/2 - log2 n
  double lower = 0;
  /// floor(n/2) + delta + a + b + c - 1
  long long upper = 0;
  std::vector<Table1Row> table1_hits;
};

BoundReport bound_report(u64 n, bool include_k1 = false);
long long upper_bound(u64 n, bool include_k1 = false);

struct CorollaryReport {
  u64 n = 0;
  /// delta + a + b + c < n/2
  bool direct_sum = false;
  bool a_le_omega = false;
  bool omega_le_log = false;
  bool c_le_max_delta = false;
  bool max_delta_le_log = false;
  bool b_lt_log = false;
  bool delta_lt_two_sqrt = false;
  bool weak_chain = false;
  /// 2 sqrt(n) + 3 log2 n <= n/2
  bool final_inequality = false;
  long double lhs = 0;
  long double rhs = 0;
};

/// Throws std::logic_error if the final inequality is too close to call in
/// long double.
CorollaryReport corollary_inequality(u64 n);

}  // namespace migs
