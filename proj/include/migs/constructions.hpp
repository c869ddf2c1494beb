#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "migs/number_theory.hpp"
#include "migs/partition.hpp"

namespace migs {

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Named pass/fail checks, in the order they were run.
struct Certificate {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {});
  bool passed() const;
  const Check* find(const std::string& name) const;
  /// Throws VerificationError naming every failed check.
  void require() const;
};

enum class LemmaCase { generic, n_eq_4i_plus_2, n_eq_4i_plus_4, eight_one };

std::string to_string(LemmaCase c);

/// A partition of n missing i and n - i as partial sums (and n/2 when
/// n = 4i + 2 or (n, i) = (8, 1)), with every other integer a partial sum.
struct LemmaPartition {
  int i = 0;
  int n = 0;
  Partition p{{1}};
  LemmaCase case_tag = LemmaCase::generic;
};

/// Throws std::invalid_argument unless 1 <= i < n/3.
LemmaPartition lemma_partition(int i, int n);

struct LemmaCertificate : Certificate {
  std::vector<int> missing;
  std::vector<int> expected_missing;
  PartialSumMask mask;
};

LemmaCertificate verify_lemma(const LemmaPartition& lp);

enum class RepairCase { small_n, case1_z_added, case2_rebuilt };

std::string to_string(RepairCase c);

struct XFamily {
  int n = 0;
  std::vector<Partition> members;
  /// witnesses[k] belongs to members[k].
  std::vector<int> witnesses;
  std::vector<long long> alpha;
  std::vector<Rational> tvals;
  int m = 0;
  RepairCase repair_case = RepairCase::small_n;
  std::optional<Partition> z;

  std::optional<int> witness_of(const Partition& member) const;
};

/// Throws std::invalid_argument for n < 5, std::logic_error if an internal
/// invariant of the construction fails.
XFamily build_x_family(int n);

/// The replacement for x_1 used when n >= 13: odd, with all of 2..n/2 as
/// partial sums.
Partition modified_x1(int n);

/// For each member, the least integer in [1, n/2] that is a partial sum of
/// every other member but not of it; 0 when there is none.
std::vector<int> least_witnesses(const std::vector<Partition>& members, int n);

struct FamilyCertificate : Certificate {
  std::vector<PartialSumMask> masks;
  std::vector<int> witnesses;
};

/// Properties (1) empty common intersection, (2) private witnesses, (3) size
/// beyond n/2 - log2 n, plus distinctness and injectivity.
FamilyCertificate verify_x_family(const XFamily& xf);

/// Replays the MIG-set argument: parity and Jordan witness of x_1 and the
/// block analysis driven by z; n = 11, 12 go through the exact oracle.
/// Throws std::invalid_argument for n < 11.
FamilyCertificate verify_mig_lower_bound(const XFamily& xf);

}  // namespace migs
