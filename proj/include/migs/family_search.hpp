#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "migs/partition.hpp"

namespace migs {

/// Largest n for which every partition of n is enumerated.
inline constexpr int kDefaultEnumerationCap = 40;
/// Largest n for the intransitive/imprimitive variant.
inline constexpr int kDefaultDescriptorCap = 24;

/// Partitions sharing one restricted mask (partial sums in 1..floor(n/2),
/// bit i-1 for integer i). Members with equal masks are interchangeable.
struct MaskGroup {
  std::uint64_t mask = 0;
  std::vector<Partition> representatives;

  int popcount() const;
};

/// Groups ordered by popcount, then by mask value. Throws std::length_error
/// when n exceeds `cap`, std::invalid_argument when n < 2.
std::vector<MaskGroup> enumerate_masks(int n, int cap = kDefaultEnumerationCap);

struct SearchOptions {
  int cap = kDefaultEnumerationCap;
  /// Worker threads scanning witness sets; the answer does not depend on it.
  int threads = 1;
  /// Start from the explicit construction's size (n >= 11).
  bool use_incumbent = true;
};

struct SearchResult {
  int n = 0;
  int t_max = 0;
  std::vector<Partition> optimal_family;
  std::vector<std::uint64_t> masks;
  /// witnesses[k] is the private integer of optimal_family[k].
  std::vector<int> witnesses;
  std::uint64_t nodes_explored = 0;
  int incumbent = 0;
  /// No family of size t_max + 1 exists.
  bool exhaustive = true;
};

/// Largest set of partitions of n with no common partial sum in [1, n/2] in
/// which every member has a private witness (an integer in [1, n/2] that is a
/// partial sum of every other member).
///
/// A family of size t is fixed by its witness set W: the member owning w has
/// mask meeting W in exactly W \ {w}. Witness sets are scanned by decreasing
/// size and in lexicographic order; for each W the remaining integers must be
/// missed by some chosen member, settled by a reachability table over subsets
/// of [1, n/2] \ W. The first feasible W and, for each witness, the first mask
/// group in enumerate_masks order are reported.
SearchResult max_family(int n, const SearchOptions& options = {});

/// Switches for the direct branch-and-bound over mask groups.
struct PruningOptions {
  /// |family| + |common partial sums| bounds the final size (witnesses are
  /// distinct elements of the common set), and never exceeds floor(n/2).
  bool witness_bound = true;
  /// |family| + candidates left must beat the incumbent.
  bool remaining_bound = true;
  /// Prune as soon as some member has no witness candidate left (decided by
  /// bipartite matching between members and integers).
  bool witness_feasibility = true;
  /// Seed the incumbent with the explicit construction (n >= 11).
  bool incumbent = true;
};

/// Depth-first search over subsets of mask groups. Independent of the
/// witness-set scan in max_family(); used to cross-check it.
SearchResult max_family_branch_and_bound(int n, const PruningOptions& pruning = {}, int cap = kDefaultEnumerationCap);

/// First family of exactly `size` partitions of n (subsets taken in
/// lexicographic order of enumerate_partitions indices) satisfying properties
/// (1) and (2) and accepted by `accept`. Witnesses come from assign_witnesses.
std::optional<SearchResult> find_family_of_size(int n, int size,
                                                const std::function<bool(const std::vector<Partition>&)>& accept,
                                                int cap = kDefaultEnumerationCap);

/// Private witnesses for a family of restricted masks over 1..h, found by
/// maximum bipartite matching (member meets integer i when i is in every
/// other mask but not in its own). nullopt if some member has none.
std::optional<std::vector<int>> assign_witnesses(std::span<const std::uint64_t> masks, int h);

/// A maximal intransitive or imprimitive subgroup class of S_n.
struct SubgroupDescriptor {
  enum class Kind { intransitive, imprimitive };
  Kind kind = Kind::intransitive;
  /// Size of the fixed subset (intransitive).
  int subset_size = 0;
  /// Block size and number of blocks (imprimitive).
  int block_size = 0;
  int block_count = 0;

  std::string to_string() const;
  friend bool operator==(const SubgroupDescriptor&, const SubgroupDescriptor&) = default;
};

/// intransitive(s) for 1 <= s <= n/2, then imprimitive(a, n/a) for every
/// divisor 2 <= a <= n/2, in that order.
std::vector<SubgroupDescriptor> intransitive_imprimitive_descriptors(int n);

bool class_meets_descriptor(const Partition& cycle_type, const SubgroupDescriptor& d);

struct DescriptorSearchResult {
  int n = 0;
  int t_max = 0;
  std::vector<Partition> classes;
  /// subgroups[k] is the descriptor missed by classes[k] and met by the others.
  std::vector<SubgroupDescriptor> subgroups;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = true;
};

/// Largest t admitting classes C_1..C_t and pairwise distinct descriptors
/// M_1..M_t with C_i missing M_i and meeting every M_j, j != i.
DescriptorSearchResult max_family_intransitive_imprimitive(int n, const SearchOptions& options = {
                                                                      kDefaultDescriptorCap, 1, true});

namespace detail {

/// Patterns are subsets of 0..universe-1. A family assigns to each element w
/// of a witness set W one pattern p_w with p_w & W == W \ {w}; with
/// `require_cover` every element outside W must also be absent from some p_w.
struct IndependenceProblem {
  int universe = 0;
  std::vector<std::uint64_t> patterns;
  bool require_cover = false;
};

struct IndependentFamily {
  std::vector<int> witnesses;           // ascending elements of W
  std::vector<std::size_t> pattern_of;  // pattern index per witness
};

/// Lexicographically first witness set of exactly `size` elements that admits
/// a family. `nodes` grows by the number of witness sets examined.
std::optional<IndependentFamily> find_independent_family(const IndependenceProblem& problem, int size, int threads,
                                                         std::uint64_t& nodes);

}  // namespace detail

}  // namespace migs
