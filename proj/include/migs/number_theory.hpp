#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace migs {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes ascending.
std::vector<PrimePower> factorize(u64 n);

bool is_prime(u64 n);

/// If q = p^e with p prime and e >= 1, returns (p, e).
std::optional<PrimePower> as_prime_power(u64 q);

std::vector<u64> divisors(u64 n);

/// Number of distinct prime divisors.
int omega(u64 n);

/// floor(log2(n)) for n >= 1.
int floor_log2(u64 n);

/// Number of bits needed to represent n (0 for n = 0).
int bit_length(u64 n);

/// True iff count > n/2 - log2(n), decided in exact integer arithmetic:
/// with s = n - 2*count the claim is log2(n) > s/2, i.e. n^2 > 2^s.
bool exceeds_half_minus_log2(long long count, long long n);

/// Saturating product; returns nullopt on overflow.
std::optional<u64> checked_mul(u64 a, u64 b);

/// Largest r with r^k <= n.
u64 integer_root(u64 n, int k);

/// base^exp, or nullopt if it exceeds `limit`.
std::optional<u64> bounded_pow(u64 base, int exp, u64 limit);

inline long long ceil_div(long long a, long long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline long long floor_div(long long a, long long b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// Exact non-negative rational with a positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  long long floor() const { return floor_div(num, den); }
  long long ceil() const { return ceil_div(num, den); }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace migs
