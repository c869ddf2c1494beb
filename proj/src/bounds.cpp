#include "migs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace migs {

int divisor_count(u64 n) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be positive");
  int count = 1;
  for (const auto& pp : factorize(n)) count *= pp.exponent + 1;
  return count;
}

namespace {

// 1 + q + ... + q^(d-1), or nullopt above `limit`.
std::optional<u64> repunit(u64 q, int d, u64 limit) {
  u64 total = 0;
  u64 term = 1;
  for (int e = 0; e < d; ++e) {
    total += term;
    if (total > limit) return std::nullopt;
    if (e + 1 < d) {
      auto next = checked_mul(term, q);
      if (!next || *next > limit) return std::nullopt;
      term = *next;
    }
  }
  return total;
}

// C(d, k), or nullopt above `limit`.
std::optional<u64> binomial(u64 d, int k, u64 limit) {
  u64 value = 1;
  for (int j = 1; j <= k; ++j) {
    // value * (d - k + j) / j stays integral at every step.
    const u64 g = std::gcd(value, static_cast<u64>(j));
    const u64 factor = (d - static_cast<u64>(k) + static_cast<u64>(j)) / (static_cast<u64>(j) / g);
    auto next = checked_mul(value / g, factor);
    if (!next || *next > limit) return std::nullopt;
    value = *next;
  }
  return value;
}

}  // namespace

std::vector<std::pair<u64, int>> projective_pairs(u64 n) {
  std::vector<std::pair<u64, int>> out;
  if (n < 3) return out;
  for (int d = 2; d <= bit_length(n); ++d) {
    u64 lo = 2;
    u64 hi = n;
    while (lo < hi) {
      const u64 mid = lo + (hi - lo) / 2;
      auto v = repunit(mid, d, n);
      if (v && *v >= n) {
        hi = mid;
      } else if (!v) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    auto v = repunit(lo, d, n);
    if (v && *v == n && as_prime_power(lo)) out.emplace_back(lo, d);
  }
  return out;
}

int count_projective(u64 n) { return static_cast<int>(projective_pairs(n).size()); }

std::vector<std::pair<u64, int>> binomial_pairs(u64 n, bool include_k1) {
  std::vector<std::pair<u64, int>> out;
  if (n < 2) return out;
  if (include_k1) out.emplace_back(n, 1);
  for (int k = 2;; ++k) {
    auto central = binomial(2 * static_cast<u64>(k), k, n);
    if (!central) break;
    u64 lo = 2 * static_cast<u64>(k);
    u64 hi = n;
    while (lo < hi) {
      const u64 mid = lo + (hi - lo) / 2;
      auto v = binomial(mid, k, n);
      if (!v || *v >= n) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    auto v = binomial(lo, k, n);
    if (v && *v == n) out.emplace_back(lo, k);
  }
  return out;
}

int count_binomial(u64 n, bool include_k1) { return static_cast<int>(binomial_pairs(n, include_k1).size()); }

int count_perfect_power(u64 n) {
  if (n < 2) throw std::invalid_argument("count_perfect_power: n must be at least 2");
  int g = 0;
  for (const auto& pp : factorize(n)) g = std::gcd(g, pp.exponent);
  return divisor_count(static_cast<u64>(g)) - 1;
}

int count_perfect_power_by_roots(u64 n) {
  if (n < 2) throw std::invalid_argument("count_perfect_power_by_roots: n must be at least 2");
  int count = 0;
  for (int k = 2; k < bit_length(n); ++k) {
    const u64 r = integer_root(n, k);
    auto p = bounded_pow(r, k, n);
    if (p && *p == n) ++count;
  }
  return count;
}

std::vector<Table1Row> table1_lookup(u64 n) {
  static const std::vector<Table1Row> rows = {
      {22, "M_22.2", 21},
      {40, "SU_4(2).2", 25},
      {45, "SU_4(2).2", 25},
  };
  std::vector<Table1Row> out;
  for (const auto& r : rows) {
    if (static_cast<u64>(r.n) == n) out.push_back(r);
  }
  return out;
}

BoundReport bound_report(u64 n, bool include_k1) {
  if (n < 2) throw std::invalid_argument("bound_report: n must be at least 2");
  BoundReport r;
  r.n = n;
  r.delta = divisor_count(n);
  r.a = count_projective(n);
  r.b = count_binomial(n, false);
  r.b_with_k1 = count_binomial(n, true);
  r.c = count_perfect_power(n);
  r.omega_nm1 = omega(n - 1);
  r.lower = static_cast<double>(n) / 2.0 - std::log2(static_cast<double>(n));
  r.upper = static_cast<long long>(n / 2) + r.delta + r.a + (include_k1 ? r.b_with_k1 : r.b) + r.c - 1;
  r.table1_hits = table1_lookup(n);
  return r;
}

long long upper_bound(u64 n, bool include_k1) { return bound_report(n, include_k1).upper; }

CorollaryReport corollary_inequality(u64 n) {
  if (n < 5) throw std::invalid_argument("corollary_inequality: n must be at least 5");
  const BoundReport b = bound_report(n);
  CorollaryReport r;
  r.n = n;
  const u64 sum = static_cast<u64>(b.delta + b.a + b.b + b.c);
  r.direct_sum = 2 * sum < n;
  r.a_le_omega = b.a <= b.omega_nm1;
  // x <= log2 n  <=>  2^x <= n;  x < log2 n  <=>  2^x < n.
  auto pow2 = [](int x) { return x >= 63 ? ~u64{0} : u64{1} << x; };
  r.omega_le_log = pow2(b.omega_nm1) <= n;
  int max_delta = 0;
  for (u64 x = 1; x <= static_cast<u64>(floor_log2(n)); ++x) max_delta = std::max(max_delta, divisor_count(x));
  r.c_le_max_delta = b.c <= max_delta;
  r.max_delta_le_log = pow2(max_delta) <= n;
  r.b_lt_log = pow2(b.b) < n;
  r.delta_lt_two_sqrt = static_cast<u64>(b.delta) * static_cast<u64>(b.delta) < 4 * n;
  r.weak_chain = r.a_le_omega && r.omega_le_log && r.c_le_max_delta && r.max_delta_le_log && r.b_lt_log &&
                 r.delta_lt_two_sqrt;
  const long double x = static_cast<long double>(n);
  r.lhs = 2.0L * std::sqrt(x) + 3.0L * std::log2(x);
  r.rhs = x / 2.0L;
  if (std::fabs(r.lhs - r.rhs) < 1e-9L) throw std::logic_error("corollary_inequality: too close to decide");
  r.final_inequality = r.lhs <= r.rhs;
  return r;
}

}  // namespace migs
