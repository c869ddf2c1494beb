#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "migs/bounds.hpp"

using namespace migs;

namespace {

bool naive_prime_power(u64 q) {
  if (q < 2) return false;
  u64 p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

// (q^d - 1)/(q - 1) = n by walking every q <= n and d >= 2.
int naive_a(u64 n) {
  int count = 0;
  for (u64 q = 2; q < n; ++q) {
    u64 total = 1 + q;
    u64 term = q;
    for (int d = 2; total <= n; ++d) {
      if (total == n && naive_prime_power(q)) ++count;
      term *= q;
      total += term;
    }
  }
  return count;
}

// Pascal's triangle rows until C(d, 2) exceeds n.
int naive_b(u64 n) {
  int count = 0;
  std::vector<u64> row = {1};
  for (u64 d = 1; d * (d - 1) / 2 <= n; ++d) {
    std::vector<u64> next(row.size() + 1, 1);
    for (std::size_t k = 1; k < row.size(); ++k) next[k] = std::min<u64>(row[k - 1] + row[k], n + 1);
    row = std::move(next);
    for (u64 k = 2; 2 * k <= d; ++k) {
      if (row[k] == n) ++count;
    }
  }
  return count;
}

int naive_c(u64 n) {
  int count = 0;
  for (u64 d = 2; d * d <= n; ++d) {
    u64 v = d * d;
    while (v < n) v *= d;
    if (v == n) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("component examples") {
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(97) == 2);
  CHECK(count_projective(7) == 1);
  CHECK(count_projective(31) == 2);
  CHECK(count_projective(12) == 1);
  CHECK(count_projective(13) == 1);
  CHECK(count_binomial(10) == 1);
  CHECK(count_binomial(3003) == 3);
  CHECK(binomial_pairs(3003) == std::vector<std::pair<u64, int>>{{78, 2}, {15, 5}, {14, 6}});
  CHECK(count_binomial(3003, true) == 4);
  CHECK(count_perfect_power(64) == 3);
  CHECK(count_perfect_power(12) == 0);
  CHECK(count_perfect_power(49) == 1);
  CHECK_THROWS_AS(divisor_count(0), std::invalid_argument);
}

TEST_CASE("upper bounds") {
  CHECK(upper_bound(12) == 12);
  CHECK(upper_bound(13) == 8);
  const BoundReport r22 = bound_report(22);
  CHECK(r22.delta == 4);
  // 21 is not a prime power and no d >= 3 gives 22.
  CHECK(r22.a == 0);
  CHECK(r22.b == 0);
  CHECK(r22.c == 0);
  CHECK(r22.upper == 14);
  REQUIRE(r22.table1_hits.size() == 1);
  CHECK(r22.table1_hits[0].group == "M_22.2");
  CHECK(r22.table1_hits[0].class_count == 21);
  CHECK(table1_lookup(40).size() == 1);
  CHECK(table1_lookup(45)[0].group == "SU_4(2).2");
  CHECK(table1_lookup(23).empty());
  CHECK(upper_bound(10, true) == upper_bound(10) + 1);
}

TEST_CASE("components against naive enumeration") {
  for (u64 n = 2; n <= 5000; ++n) {
    CAPTURE(n);
    CHECK(count_projective(n) == naive_a(n));
    CHECK(count_binomial(n) == naive_b(n));
    CHECK(count_perfect_power(n) == naive_c(n));
    CHECK(count_perfect_power_by_roots(n) == count_perfect_power(n));
  }
}

TEST_CASE("weak estimates") {
  for (u64 n = 5; n <= 100000; ++n) {
    const BoundReport b = bound_report(n);
    if (b.a > b.omega_nm1 || b.b_with_k1 != b.b + 1) {
      FAIL("estimate broken at n = " << n);
    }
    if (n >= 71) {
      const CorollaryReport c = corollary_inequality(n);
      if (!c.final_inequality || !c.direct_sum) FAIL("corollary broken at n = " << n);
    }
  }
  CHECK_FALSE(corollary_inequality(70).final_inequality);
  CHECK(corollary_inequality(70).direct_sum);
  CHECK(corollary_inequality(71).final_inequality);
  // At n = 5 every estimate of the chain holds; only the final inequality and
  // the direct sum fail.
  const CorollaryReport five = corollary_inequality(5);
  CHECK(five.weak_chain);
  CHECK_FALSE(five.final_inequality);
  CHECK_FALSE(five.direct_sum);
  CHECK_THROWS_AS(corollary_inequality(4), std::invalid_argument);
}
