#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace migs {

/// Largest degree accepted by the partial-sum machinery.
inline constexpr int kDefaultDegreeCap = 10000;

/// A partition of n, read as the cycle type of a permutation in S_n.
/// Parts are kept in non-increasing order whatever order they were given in.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  /// Parses `7,5,1^3`, `(1^3,5,7)` or `1 1 1 5 7`. When `degree` is given and
  /// the parts sum to less than it, the remainder is filled with fixed points,
  /// so `(2)` means a transposition.
  static Partition parse(std::string_view text, std::optional<int> degree = std::nullopt);

  /// (1^n)
  static Partition identity(int n);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  int largest() const { return parts_.front(); }
  int multiplicity(int part) const;

  /// Exponent-compressed, descending: `7,5,1^3`.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Set of achievable partial sums of a partition, as a bit vector over 0..n.
class PartialSumMask {
 public:
  PartialSumMask() = default;
  PartialSumMask(int n, std::vector<std::uint64_t> words);

  int degree() const { return n_; }
  bool test(int i) const;

  /// Integers in [lo, hi] that are not partial sums.
  std::vector<int> missing(int lo, int hi) const;
  /// Integers in [lo, hi] that are partial sums.
  std::vector<int> present(int lo, int hi) const;

  /// Bits for 1..floor(n/2), bit (i-1) standing for i. Requires n/2 <= 64.
  std::uint64_t restricted_bits() const;

  /// `0`/`1` characters for 0..n.
  std::string to_bitstring() const;

  friend bool operator==(const PartialSumMask&, const PartialSumMask&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Every partition of n, largest parts first: (n), (n-1,1), (n-2,2), ...
std::vector<Partition> enumerate_partitions(int n);

enum class Parity { even, odd };

std::string to_string(Parity p);

PartialSumMask partial_sums(const Partition& p, int degree_cap = kDefaultDegreeCap);

/// Throws std::out_of_range unless 0 <= i <= n.
bool is_partial_sum(const Partition& p, int i);

Parity parity(const Partition& p);

/// Cycle type of sigma^k for sigma of type p.
Partition power_type(const Partition& p, std::uint64_t k);

/// One type is a power of the other. Throws std::invalid_argument on degree
/// mismatch and std::length_error when the order has too many divisors to scan.
bool equivalent_types(const Partition& p, const Partition& q);

/// Largest prime l such that some power of a permutation of type p is an
/// l-cycle fixing at least three points.
std::optional<int> jordan_witness(const Partition& p);

/// Whether a permutation of type p preserves some partition of the points
/// into `block_count` blocks of size `block_size`, i.e. lies in a conjugate
/// of S_a wr S_b. Throws std::invalid_argument unless a, b >= 2 and a*b = n.
bool wreath_realizable(const Partition& p, int block_size, int block_count);

}  // namespace migs
