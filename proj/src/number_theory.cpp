#include "migs/number_theory.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace migs {

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (u64 p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 p = 3; p <= n / p; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int omega(u64 n) { return static_cast<int>(factorize(n).size()); }

int floor_log2(u64 n) {
  if (n == 0) throw std::invalid_argument("floor_log2: n must be positive");
  return bit_length(n) - 1;
}

int bit_length(u64 n) { return static_cast<int>(std::bit_width(n)); }

bool exceeds_half_minus_log2(long long count, long long n) {
  if (n < 1) throw std::invalid_argument("exceeds_half_minus_log2: n must be positive");
  const long long s = n - 2 * count;
  if (s <= 0) {
    // count >= n/2 >= n/2 - log2 n, strict unless n = 1 and count = n/2.
    return s < 0 || n > 1;
  }
  if (s >= 126) return false;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(n);
  const unsigned __int128 rhs = static_cast<unsigned __int128>(1) << s;
  return lhs > rhs;
}

std::optional<u64> checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<u64> bounded_pow(u64 base, int exp, u64 limit) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next || *next > limit) return std::nullopt;
    r = *next;
  }
  return r;
}

u64 integer_root(u64 n, int k) {
  if (k <= 0) throw std::invalid_argument("integer_root: k must be positive");
  if (k == 1 || n < 2) return n;
  u64 lo = 1;
  u64 hi = u64{1} << ((bit_length(n) + k - 1) / k);
  while (lo < hi) {
    const u64 mid = lo + (hi - lo + 1) / 2;
    if (bounded_pow(mid, k, n)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace migs
