#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "migs/partition.hpp"
#include "migs/permutation.hpp"

namespace migs {

enum class SubgroupKind { intransitive, imprimitive, affine, almost_simple, diagonal, product };

std::string to_string(SubgroupKind kind);
SubgroupKind parse_subgroup_kind(std::string_view text);

/// One conjugacy class of maximal subgroups of S_n.
struct MaximalSubgroupRecord {
  int n = 0;
  std::string label;
  SubgroupKind kind = SubgroupKind::intransitive;
  std::vector<Permutation> generators;
  std::uint64_t expected_order = 0;
  /// Number of conjugacy classes of the subgroup, when known.
  std::optional<int> class_count;
  /// A_n; meets exactly the even classes.
  bool alternating = false;
  int subset_size = 0;
  int block_size = 0;
  int block_count = 0;
  /// Sorted cycle types of all elements (primitive records only).
  std::vector<Partition> cycle_types;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Records for S_n, 1 <= s < n/2 intransitive first, then imprimitive by block
/// size, then the listed primitive groups, then A_n.
class SubgroupDataset {
 public:
  /// Parses the versioned text format and completes every degree it mentions
  /// with the generated records. Throws DatasetError on malformed input or a
  /// failed self-check (order, transitivity, primitivity).
  static SubgroupDataset parse(std::string_view text);
  static SubgroupDataset load_file(const std::string& path);

  bool covers(int n) const { return by_degree_.count(n) != 0; }
  int min_degree() const;
  int max_degree() const;
  /// Throws std::out_of_range for degrees outside the dataset.
  const std::vector<MaximalSubgroupRecord>& records(int n) const;

 private:
  std::map<int, std::vector<MaximalSubgroupRecord>> by_degree_;
};

/// Bundled dataset, 5 <= n <= 12.
const SubgroupDataset& builtin_dataset();

MaximalSubgroupRecord make_intransitive_record(int n, int s);
MaximalSubgroupRecord make_imprimitive_record(int block_size, int block_count);
MaximalSubgroupRecord make_alternating_record(int n);

/// Whether the subgroup contains an element of the given cycle type. Throws
/// std::invalid_argument on degree mismatch.
bool class_meets_subgroup(const Partition& cycle_type, const MaximalSubgroupRecord& record);

struct InvariableResult {
  bool generates = false;
  /// A record meeting every class, when one exists.
  std::optional<MaximalSubgroupRecord> witness;
};

/// Throws std::out_of_range when n is outside the dataset.
InvariableResult invariably_generates(int n, const std::vector<Partition>& classes,
                                      const SubgroupDataset& dataset = builtin_dataset());

struct MigCertificate {
  bool is_mig = false;
  bool generates = false;
  std::optional<MaximalSubgroupRecord> overgroup;
  /// subgroups[i] meets every class except classes[i]. Missing entries
  /// break minimality.
  std::vector<std::optional<MaximalSubgroupRecord>> subgroups;
};

MigCertificate is_mig_set(int n, const std::vector<Partition>& classes,
                          const SubgroupDataset& dataset = builtin_dataset());

/// Nontrivial cycle types of S_n meeting at least `threshold` records.
std::vector<Partition> cycle_types_meeting_at_least(int n, int threshold, bool count_alternating,
                                                    const SubgroupDataset& dataset = builtin_dataset());

struct MigScan {
  int n = 0;
  int size = 0;
  bool found = false;
  std::vector<Partition> example;
  std::uint64_t sets_checked = 0;
};

/// Exhaustive scan over `size`-subsets of nontrivial cycle types.
MigScan find_mig_set_of_size(int n, int size, const SubgroupDataset& dataset = builtin_dataset());

}  // namespace migs
