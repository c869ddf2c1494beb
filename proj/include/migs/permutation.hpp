#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "migs/partition.hpp"

namespace migs {

/// Bijection on {0, ..., n-1} in array form. Text uses 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// `(1 2 3)(4 5)` or `(1,2,3)(4,5)`; `()` is the identity.
  static Permutation parse_cycles(std::string_view text, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  /// Apply *this first, then `other`.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  Partition cycle_type() const;
  Parity parity() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A block system: disjoint blocks covering all points, each sorted, ordered
/// by smallest element.
using BlockSystem = std::vector<std::vector<int>>;

/// Permutation group given by generators, with a stabilizer chain built on
/// first use. Not safe to share while the chain is being built.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// Product of the fundamental orbit lengths. Throws std::overflow_error if
  /// it does not fit in 64 bits.
  std::uint64_t order();
  const std::vector<int>& base();

  bool contains(const Permutation& g);

  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;
  /// Minimal nontrivial block systems; empty iff primitive. Throws
  /// std::invalid_argument when the group is intransitive.
  std::vector<BlockSystem> minimal_blocks() const;
  bool is_primitive() const;

  /// Calls `visit` once per element. Throws std::length_error when the order
  /// exceeds `limit`.
  void for_each_element(const std::function<void(const Permutation&)>& visit, std::uint64_t limit = 10'000'000);

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators;
    std::vector<int> orbit;
    // transversal[p] maps base_point to p; empty when p is outside the orbit.
    std::vector<Permutation> transversal;
  };

  void build();
  void insert(std::size_t first, std::size_t last, const Permutation& g);
  void add_generator(std::size_t level, const Permutation& g);
  // Residue of g and the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::vector<int> base_;
  bool built_ = false;
};

/// Finest block system in which `a` and `b` share a block.
BlockSystem minimal_block_system(int degree, const std::vector<Permutation>& generators, int a, int b);

}  // namespace migs
