#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "migs/constructions.hpp"
#include "migs/family_search.hpp"
#include "migs/group_oracle.hpp"
#include "oracles.hpp"

using namespace migs;

namespace {

// Restricted masks from the 2^t subset oracle, deduplicated.
std::vector<std::uint64_t> naive_masks(int n) {
  std::set<std::uint64_t> masks;
  for (const auto& parts : oracle::all_partitions(n)) {
    std::uint64_t m = 0;
    for (int s : oracle::subset_sums(parts)) {
      if (s >= 1 && s <= n / 2) m |= std::uint64_t{1} << (s - 1);
    }
    masks.insert(m);
  }
  return {masks.begin(), masks.end()};
}

bool satisfies_definition(const std::vector<std::uint64_t>& family, int h) {
  const std::uint64_t full = (std::uint64_t{1} << h) - 1;
  std::uint64_t all = full;
  for (auto m : family) all &= m;
  if (all != 0) return false;
  for (std::size_t x = 0; x < family.size(); ++x) {
    std::uint64_t others = full;
    for (std::size_t y = 0; y < family.size(); ++y) {
      if (y != x) others &= family[y];
    }
    if ((others & ~family[x]) == 0) return false;
  }
  return true;
}

int naive_t_max(int n) {
  const int h = n / 2;
  const auto masks = naive_masks(n);
  int best = 0;
  std::vector<std::uint64_t> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) > best && satisfies_definition(chosen, h)) best = static_cast<int>(chosen.size());
    if (static_cast<int>(chosen.size()) == h + 1) return;
    for (std::size_t k = start; k < masks.size(); ++k) {
      chosen.push_back(masks[k]);
      walk(k + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return best;
}

// Exhaustive search for an injective choice of private witnesses.
bool witnesses_exist(const std::vector<std::uint64_t>& masks, int h) {
  std::vector<int> used(static_cast<std::size_t>(h), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t x) {
    if (x == masks.size()) return true;
    for (int i = 0; i < h; ++i) {
      if (used[static_cast<std::size_t>(i)] || ((masks[x] >> i) & 1U)) continue;
      bool common = true;
      for (std::size_t y = 0; y < masks.size() && common; ++y) {
        if (y != x) common = (masks[y] >> i) & 1U;
      }
      if (!common) continue;
      used[static_cast<std::size_t>(i)] = 1;
      if (rec(x + 1)) return true;
      used[static_cast<std::size_t>(i)] = 0;
    }
    return false;
  };
  return rec(0);
}

const std::vector<int> kFrozenTMax = {2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 10, 11, 10, 11, 12, 12, 12};

}  // namespace

TEST_CASE("mask groups") {
  const auto groups = enumerate_masks(6);
  std::set<std::uint64_t> seen;
  std::size_t members = 0;
  for (const auto& g : groups) {
    CHECK(seen.insert(g.mask).second);
    members += g.representatives.size();
    for (const auto& p : g.representatives) CHECK(partial_sums(p).restricted_bits() == g.mask);
  }
  CHECK(members == enumerate_partitions(6).size());
  CHECK(std::is_sorted(groups.begin(), groups.end(), [](const MaskGroup& a, const MaskGroup& b) {
    return a.popcount() != b.popcount() ? a.popcount() < b.popcount() : a.mask < b.mask;
  }));
  // Sums 2 and 3 without 1 need parts 2 and 3, which leave a part 1.
  CHECK(seen.count(0b110) == 0);
  const auto naive = naive_masks(6);
  CHECK(std::set<std::uint64_t>(naive.begin(), naive.end()) == seen);
  CHECK_THROWS_AS(enumerate_masks(41), std::length_error);
  CHECK_THROWS_AS(enumerate_masks(1), std::invalid_argument);
}

TEST_CASE("small cases") {
  const SearchResult five = max_family(5);
  CHECK(five.t_max == 2);
  CHECK(five.exhaustive);
  const SearchResult six = max_family(6);
  CHECK(six.t_max == 2);
  CHECK(six.witnesses.size() == 2);
}

TEST_CASE("max_family agrees with the naive oracle") {
  for (int n = 5; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(max_family(n).t_max == naive_t_max(n));
  }
}

TEST_CASE("frozen t_max values and result soundness") {
  for (int n = 5; n <= 30; ++n) {
    CAPTURE(n);
    const SearchResult r = max_family(n);
    CHECK(r.t_max == kFrozenTMax[static_cast<std::size_t>(n - 5)]);
    CHECK(exceeds_half_minus_log2(r.t_max, n));
    CHECK(r.t_max <= n / 2);
    std::vector<std::uint64_t> masks;
    for (const auto& p : r.optimal_family) masks.push_back(partial_sums(p).restricted_bits());
    CHECK(masks == r.masks);
    CHECK(satisfies_definition(masks, n / 2));
    CHECK(std::set<int>(r.witnesses.begin(), r.witnesses.end()).size() == r.witnesses.size());
    for (std::size_t x = 0; x < masks.size(); ++x) {
      const int w = r.witnesses[x];
      CHECK_FALSE(is_partial_sum(r.optimal_family[x], w));
      for (std::size_t y = 0; y < masks.size(); ++y) {
        if (y != x) CHECK(is_partial_sum(r.optimal_family[y], w));
      }
    }
  }
}

TEST_CASE("incumbent does not change the answer") {
  for (int n = 11; n <= 24; ++n) {
    CAPTURE(n);
    const SearchResult with = max_family(n, {kDefaultEnumerationCap, 1, true});
    const SearchResult without = max_family(n, {kDefaultEnumerationCap, 1, false});
    CHECK(with.t_max == without.t_max);
    CHECK(with.optimal_family == without.optimal_family);
    CHECK(with.incumbent == static_cast<int>(build_x_family(n).members.size()));
  }
}

TEST_CASE("thread count does not change the answer") {
  for (int n : {14, 20, 26, 30}) {
    CAPTURE(n);
    const SearchResult one = max_family(n, {kDefaultEnumerationCap, 1, true});
    const SearchResult many = max_family(n, {kDefaultEnumerationCap, 4, true});
    CHECK(one.t_max == many.t_max);
    CHECK(one.optimal_family == many.optimal_family);
    CHECK(one.witnesses == many.witnesses);
    CHECK(one.nodes_explored == many.nodes_explored);
  }
}

TEST_CASE("branch and bound cross-check") {
  const PruningOptions none{false, false, false, false};
  for (int n = 5; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(max_family_branch_and_bound(n, none).t_max == max_family(n).t_max);
  }
  for (int n = 5; n <= 22; ++n) {
    CAPTURE(n);
    CHECK(max_family_branch_and_bound(n).t_max == max_family(n).t_max);
  }
  CHECK(max_family_branch_and_bound(12).nodes_explored <= max_family_branch_and_bound(12, none).nodes_explored);
}

TEST_CASE("assign_witnesses matches exhaustive assignment") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int h = std::uniform_int_distribution<int>(2, 8)(rng);
    const int t = std::uniform_int_distribution<int>(1, h + 1)(rng);
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << h) - 1);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(t));
    for (auto& m : masks) m = bits(rng) | bits(rng);
    const auto got = assign_witnesses(masks, h);
    CHECK(got.has_value() == witnesses_exist(masks, h));
    if (got) {
      CHECK(std::set<int>(got->begin(), got->end()).size() == masks.size());
      for (std::size_t x = 0; x < masks.size(); ++x) {
        const int i = (*got)[x] - 1;
        CHECK(((masks[x] >> i) & 1U) == 0);
        for (std::size_t y = 0; y < masks.size(); ++y) {
          if (y != x) CHECK(((masks[y] >> i) & 1U) == 1);
        }
      }
    }
  }
}

TEST_CASE("find_family_of_size") {
  const auto any = [](const std::vector<Partition>&) { return true; };
  CHECK(find_family_of_size(8, 3, any).has_value());
  CHECK_FALSE(find_family_of_size(8, 4, any).has_value());
  const auto found = find_family_of_size(10, 4, any);
  REQUIRE(found.has_value());
  CHECK(found->optimal_family.size() == 4);
}

TEST_CASE("intransitive and imprimitive descriptors") {
  const auto ds = intransitive_imprimitive_descriptors(12);
  CHECK(ds.size() == 10);
  CHECK(ds.front().to_string() == "intransitive(1)");
  CHECK(ds.back().to_string() == "imprimitive(6,2)");
  // The descriptor predicate agrees with the generated records.
  for (int n = 4; n <= 9; ++n) {
    for (const auto& d : intransitive_imprimitive_descriptors(n)) {
      // S_s x S_s is not maximal and has no record.
      if (d.kind == SubgroupDescriptor::Kind::intransitive && 2 * d.subset_size == n) continue;
      const MaximalSubgroupRecord rec = d.kind == SubgroupDescriptor::Kind::intransitive
                                            ? make_intransitive_record(n, d.subset_size)
                                            : make_imprimitive_record(d.block_size, d.block_count);
      for (const auto& p : enumerate_partitions(n)) {
        CAPTURE(p.to_string());
        CHECK(class_meets_descriptor(p, d) == class_meets_subgroup(p, rec));
      }
    }
  }
  const DescriptorSearchResult r = max_family_intransitive_imprimitive(12);
  CHECK(r.t_max <= 10);
  CHECK(r.t_max >= max_family(12).t_max);
  REQUIRE(r.classes.size() == static_cast<std::size_t>(r.t_max));
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    for (std::size_t j = 0; j < r.subgroups.size(); ++j) {
      CHECK(class_meets_descriptor(r.classes[i], r.subgroups[j]) == (i != j));
      if (j > i) CHECK_FALSE(r.subgroups[i] == r.subgroups[j]);
    }
  }
}
