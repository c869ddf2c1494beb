#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "migs/partition.hpp"

namespace migs::oracle {

inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int a = std::min(rest, max_part); a >= 1; --a) {
      cur.push_back(a);
      rec(rest - a, a);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Every sub-multiset sum by walking all 2^t index subsets.
inline std::set<int> subset_sums(const std::vector<int>& parts) {
  std::set<int> sums;
  const std::size_t t = parts.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << t); ++s) {
    int total = 0;
    for (std::size_t i = 0; i < t; ++i) {
      if ((s >> i) & 1U) total += parts[i];
    }
    sums.insert(total);
  }
  return sums;
}

using Perm = std::vector<int>;

/// A permutation with the given cycle type: consecutive points per cycle.
inline Perm representative(const std::vector<int>& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  Perm p(static_cast<std::size_t>(n));
  int start = 0;
  for (int a : parts) {
    for (int j = 0; j < a; ++j) p[start + j] = start + (j + 1) % a;
    start += a;
  }
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {  // a then b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm power(const Perm& p, std::uint64_t k) {
  Perm r(p.size());
  std::iota(r.begin(), r.end(), 0);
  for (std::uint64_t i = 0; i < k; ++i) r = compose(r, p);
  return r;
}

inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> lens;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return lens;
}

inline int sign_by_inversions(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/// All ways to split {0..n-1} into blocks of the given size.
inline std::vector<std::vector<int>> block_systems(int n, int block_size) {
  std::vector<std::vector<int>> systems;  // point -> block index
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  std::vector<int> fill;
  std::function<void(int)> rec = [&](int next_block) {
    int first = 0;
    while (first < n && block[first] != -1) ++first;
    if (first == n) {
      systems.push_back(block);
      return;
    }
    block[first] = next_block;
    std::vector<int> free;
    for (int i = first + 1; i < n; ++i)
      if (block[i] == -1) free.push_back(i);
    std::function<void(std::size_t, int)> choose = [&](std::size_t from, int need) {
      if (need == 0) {
        rec(next_block + 1);
        return;
      }
      for (std::size_t k = from; k < free.size(); ++k) {
        block[free[k]] = next_block;
        choose(k + 1, need - 1);
        block[free[k]] = -1;
      }
    };
    choose(0, block_size - 1);
    block[first] = -1;
  };
  rec(0);
  return systems;
}

inline bool preserves(const Perm& p, const std::vector<int>& block_of) {
  const std::size_t n = p.size();
  std::vector<int> image(n, -1);  // block -> image block
  for (std::size_t i = 0; i < n; ++i) {
    const int b = block_of[i];
    const int c = block_of[static_cast<std::size_t>(p[i])];
    if (image[b] == -1) image[b] = c;
    if (image[b] != c) return false;
  }
  return true;
}

/// Brute force: does a permutation of this type preserve some system of
/// blocks of size a?
inline bool preserves_some_block_system(const std::vector<int>& parts, int block_size) {
  const Perm p = representative(parts);
  for (const auto& sys : block_systems(static_cast<int>(p.size()), block_size))
    if (preserves(p, sys)) return true;
  return false;
}

inline Partition random_partition(std::mt19937_64& rng, int max_parts, int max_part) {
  std::uniform_int_distribution<int> count(1, max_parts);
  std::uniform_int_distribution<int> value(1, max_part);
  std::vector<int> parts(static_cast<std::size_t>(count(rng)));
  for (int& a : parts) a = value(rng);
  return Partition(parts);
}

}  // namespace migs::oracle
