#include "migs/family_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "migs/constructions.hpp"
#include "migs/matching.hpp"

namespace migs {

int MaskGroup::popcount() const { return std::popcount(mask); }

std::vector<MaskGroup> enumerate_masks(int n, int cap) {
  if (n < 2) throw std::invalid_argument("enumerate_masks: n must be at least 2");
  if (n > cap) {
    throw std::length_error("enumerate_masks: n = " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(cap));
  }
  std::map<std::uint64_t, std::size_t> index;
  std::vector<MaskGroup> groups;
  for (Partition& p : enumerate_partitions(n)) {
    const std::uint64_t mask = partial_sums(p).restricted_bits();
    auto [it, inserted] = index.emplace(mask, groups.size());
    if (inserted) groups.push_back({mask, {}});
    groups[it->second].representatives.push_back(std::move(p));
  }
  std::stable_sort(groups.begin(), groups.end(), [](const MaskGroup& a, const MaskGroup& b) {
    if (a.popcount() != b.popcount()) return a.popcount() < b.popcount();
    return a.mask < b.mask;
  });
  return groups;
}

namespace {

std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

std::vector<int> elements_of(std::uint64_t set) {
  std::vector<int> out;
  while (set != 0) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

// Bits of `value` at the positions listed in `positions`, packed low to high.
std::uint32_t compress(std::uint64_t value, const std::vector<int>& positions) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if ((value >> positions[i]) & 1U) out |= std::uint32_t{1} << i;
  }
  return out;
}

std::optional<detail::IndependentFamily> try_witness_set(const detail::IndependenceProblem& problem,
                                                         std::uint64_t witness_set) {
  const std::uint64_t universe = low_bits(problem.universe);
  const std::vector<int> witnesses = elements_of(witness_set);
  const std::vector<int> rest = elements_of(universe & ~witness_set);
  constexpr std::size_t kMaxRest = 24;
  if (problem.require_cover && rest.size() > kMaxRest) {
    throw std::length_error("independent family search: uncovered remainder too large");
  }

  // options[k]: (pattern index, bits of `rest` the pattern misses), one per distinct miss set.
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> options(witnesses.size());
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    const std::uint64_t target = witness_set & ~(std::uint64_t{1} << witnesses[k]);
    std::vector<std::uint32_t> seen_keys;
    for (std::size_t idx = 0; idx < problem.patterns.size(); ++idx) {
      const std::uint64_t p = problem.patterns[idx];
      if ((p & witness_set) != target) continue;
      if (!problem.require_cover) {
        options[k].emplace_back(idx, 0);
        break;
      }
      const std::uint32_t key = compress(~p & universe, rest);
      if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end()) continue;
      seen_keys.push_back(key);
      options[k].emplace_back(idx, key);
    }
    if (options[k].empty()) return std::nullopt;
  }

  detail::IndependentFamily family;
  family.witnesses = witnesses;
  family.pattern_of.resize(witnesses.size());
  if (!problem.require_cover || rest.empty()) {
    for (std::size_t k = 0; k < witnesses.size(); ++k) family.pattern_of[k] = options[k].front().first;
    return family;
  }

  // Reachable unions of miss sets over `rest`, stage by stage, remembering the
  // first option that reached each state.
  const std::uint32_t states = std::uint32_t{1} << rest.size();
  const std::uint32_t full = states - 1;
  std::vector<std::vector<std::int32_t>> choice(witnesses.size());
  std::vector<std::vector<std::uint32_t>> from(witnesses.size());
  std::vector<std::uint32_t> frontier{0};
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    choice[k].assign(states, -1);
    from[k].assign(states, 0);
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : frontier) {
      for (std::size_t opt = 0; opt < options[k].size(); ++opt) {
        const std::uint32_t t = s | options[k][opt].second;
        if (choice[k][t] != -1) continue;
        choice[k][t] = static_cast<std::int32_t>(opt);
        from[k][t] = s;
        next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  if (choice.back()[full] == -1) return std::nullopt;
  std::uint32_t state = full;
  for (std::size_t k = witnesses.size(); k-- > 0;) {
    family.pattern_of[k] = options[k][static_cast<std::size_t>(choice[k][state])].first;
    state = from[k][state];
  }
  return family;
}

std::vector<std::uint64_t> combinations(int universe, int size) {
  if (size < 0 || size > universe) return {};
  long double count = 1;
  for (int i = 0; i < size; ++i) count = count * (universe - i) / (i + 1);
  if (count > 5e7) throw std::length_error("independent family search: too many witness sets");
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::uint64_t set = 0;
    for (int i : idx) set |= std::uint64_t{1} << i;
    out.push_back(set);
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == universe - size + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

namespace detail {

std::optional<IndependentFamily> find_independent_family(const IndependenceProblem& problem, int size, int threads,
                                                         std::uint64_t& nodes) {
  if (problem.universe > 63) throw std::length_error("independent family search: universe wider than 63");
  const std::vector<std::uint64_t> sets = combinations(problem.universe, size);
  if (sets.empty()) return std::nullopt;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::atomic<std::size_t> cursor{0};
  constexpr std::size_t kChunk = 256;
  auto worker = [&] {
    while (true) {
      const std::size_t begin = cursor.fetch_add(kChunk);
      if (begin >= sets.size() || begin > best.load()) return;
      const std::size_t end = std::min(sets.size(), begin + kChunk);
      for (std::size_t i = begin; i < end && i < best.load(); ++i) {
        if (try_witness_set(problem, sets[i])) {
          std::size_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
          break;
        }
      }
    }
  };
  const int workers = std::max(1, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  const std::size_t found = best.load();
  if (found == kNone) {
    nodes += sets.size();
    return std::nullopt;
  }
  nodes += found + 1;
  return try_witness_set(problem, sets[found]);
}

}  // namespace detail

std::optional<std::vector<int>> assign_witnesses(std::span<const std::uint64_t> masks, int h) {
  const std::uint64_t universe = low_bits(h);
  const int t = static_cast<int>(masks.size());
  BipartiteMatcher matcher(t, h);
  for (int x = 0; x < t; ++x) {
    std::uint64_t others = universe;
    for (int y = 0; y < t; ++y) {
      if (y != x) others &= masks[y];
    }
    for (int i : elements_of(others & ~masks[x])) matcher.add_edge(x, i);
  }
  if (matcher.solve() < t) return std::nullopt;
  std::vector<int> witnesses;
  for (int v : matcher.match_of_left()) witnesses.push_back(v + 1);
  return witnesses;
}

SearchResult max_family(int n, const SearchOptions& options) {
  if (n < 2) throw std::invalid_argument("max_family: n must be at least 2");
  const std::vector<MaskGroup> groups = enumerate_masks(n, options.cap);
  const int h = n / 2;
  detail::IndependenceProblem problem{h, {}, true};
  for (const auto& g : groups) problem.patterns.push_back(g.mask);

  SearchResult result;
  result.n = n;
  if (options.use_incumbent && n >= 11) result.incumbent = static_cast<int>(build_x_family(n).members.size());

  const int upper = std::min<int>(h, static_cast<int>(groups.size()));
  std::optional<detail::IndependentFamily> family;
  int size = upper;
  for (; size > result.incumbent && !family; --size) {
    family = detail::find_independent_family(problem, size, options.threads, result.nodes_explored);
  }
  if (family) {
    result.t_max = size + 1;
  } else if (result.incumbent > 0) {
    family = detail::find_independent_family(problem, result.incumbent, options.threads, result.nodes_explored);
    if (!family) throw std::logic_error("max_family: incumbent size is infeasible");
    result.t_max = result.incumbent;
  } else {
    throw std::logic_error("max_family: no family found");
  }

  for (std::size_t k = 0; k < family->witnesses.size(); ++k) {
    const MaskGroup& g = groups[family->pattern_of[k]];
    result.optimal_family.push_back(g.representatives.front());
    result.masks.push_back(g.mask);
    result.witnesses.push_back(family->witnesses[k] + 1);
  }
  return result;
}

namespace {

struct BranchAndBound {
  const std::vector<MaskGroup>& groups;
  PruningOptions pruning;
  int h;
  std::uint64_t universe;
  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> chosen_masks;
  std::vector<std::size_t> best;
  int best_size = 0;
  std::uint64_t nodes = 0;

  // candidates[x]: integers in every other chosen mask but not in chosen[x].
  void dfs(std::size_t start, std::uint64_t common, std::vector<std::uint64_t>& candidates) {
    ++nodes;
    const int t = static_cast<int>(chosen.size());
    const bool valid =
        common == 0 && std::all_of(candidates.begin(), candidates.end(), [](std::uint64_t c) { return c != 0; });
    if (t > best_size && valid) {
      best_size = t;
      best = chosen;
    }
    if (pruning.witness_bound) {
      if (t >= h || t + std::popcount(common) <= best_size) return;
    }
    if (pruning.remaining_bound && t + static_cast<int>(groups.size() - start) <= best_size) return;

    std::vector<std::uint64_t> next(candidates.size() + 1);
    for (std::size_t idx = start; idx < groups.size(); ++idx) {
      const std::uint64_t m = groups[idx].mask;
      for (std::size_t x = 0; x < candidates.size(); ++x) next[x] = candidates[x] & m;
      next.back() = common & ~m;
      if (pruning.witness_feasibility) {
        chosen_masks.push_back(m);
        const bool feasible = matching_feasible(next);
        chosen_masks.pop_back();
        if (!feasible) continue;
      }
      chosen.push_back(idx);
      chosen_masks.push_back(m);
      dfs(idx + 1, common & m, next);
      chosen.pop_back();
      chosen_masks.pop_back();
      next.resize(candidates.size() + 1);
    }
  }

  bool matching_feasible(const std::vector<std::uint64_t>& candidates) const {
    const int t = static_cast<int>(candidates.size());
    BipartiteMatcher matcher(t, h);
    for (int x = 0; x < t; ++x) {
      for (int i : elements_of(candidates[x])) matcher.add_edge(x, i);
    }
    return matcher.solve() == t;
  }
};

}  // namespace

SearchResult max_family_branch_and_bound(int n, const PruningOptions& pruning, int cap) {
  const std::vector<MaskGroup> groups = enumerate_masks(n, cap);
  const int h = n / 2;
  BranchAndBound bb{groups, pruning, h, low_bits(h), {}, {}, {}, 0, 0};

  SearchResult result;
  result.n = n;
  std::vector<Partition> incumbent_members;
  if (pruning.incumbent && n >= 11) {
    incumbent_members = build_x_family(n).members;
    result.incumbent = static_cast<int>(incumbent_members.size());
    bb.best_size = result.incumbent;
  }
  std::vector<std::uint64_t> candidates;
  bb.dfs(0, bb.universe, candidates);
  result.nodes_explored = bb.nodes;
  result.t_max = bb.best_size;

  if (!bb.best.empty()) {
    for (std::size_t idx : bb.best) {
      result.optimal_family.push_back(groups[idx].representatives.front());
      result.masks.push_back(groups[idx].mask);
    }
  } else {
    result.optimal_family = incumbent_members;
    for (const auto& p : incumbent_members) result.masks.push_back(partial_sums(p).restricted_bits());
  }
  if (auto w = assign_witnesses(result.masks, h)) result.witnesses = *w;
  return result;
}

std::optional<SearchResult> find_family_of_size(int n, int size,
                                                const std::function<bool(const std::vector<Partition>&)>& accept,
                                                int cap) {
  if (n < 2) throw std::invalid_argument("find_family_of_size: n must be at least 2");
  if (n > cap) throw std::length_error("find_family_of_size: n exceeds the enumeration cap");
  const int h = n / 2;
  const std::vector<Partition> partitions = enumerate_partitions(n);
  std::vector<std::uint64_t> masks;
  for (const auto& p : partitions) masks.push_back(partial_sums(p).restricted_bits());

  SearchResult result;
  result.n = n;
  std::vector<std::size_t> chosen;
  std::vector<std::uint64_t> chosen_masks;
  // Members still to add need distinct witnesses inside `common`.
  std::function<bool(std::size_t, std::uint64_t)> dfs = [&](std::size_t start, std::uint64_t common) {
    ++result.nodes_explored;
    const int k = static_cast<int>(chosen.size());
    if (k == size) {
      if (common != 0) return false;
      auto witnesses = assign_witnesses(chosen_masks, h);
      if (!witnesses) return false;
      std::vector<Partition> family;
      for (std::size_t idx : chosen) family.push_back(partitions[idx]);
      if (!accept(family)) return false;
      result.t_max = size;
      result.optimal_family = std::move(family);
      result.masks = chosen_masks;
      result.witnesses = *witnesses;
      return true;
    }
    if (size - k > std::popcount(common)) return false;
    for (std::size_t idx = start; idx < partitions.size(); ++idx) {
      chosen.push_back(idx);
      chosen_masks.push_back(masks[idx]);
      const bool done = dfs(idx + 1, common & masks[idx]);
      chosen.pop_back();
      chosen_masks.pop_back();
      if (done) return true;
    }
    return false;
  };
  if (size < 1 || !dfs(0, low_bits(h))) return std::nullopt;
  result.exhaustive = false;
  return result;
}

std::string SubgroupDescriptor::to_string() const {
  if (kind == Kind::intransitive) return "intransitive(" + std::to_string(subset_size) + ")";
  return "imprimitive(" + std::to_string(block_size) + "," + std::to_string(block_count) + ")";
}

std::vector<SubgroupDescriptor> intransitive_imprimitive_descriptors(int n) {
  std::vector<SubgroupDescriptor> out;
  for (int s = 1; s <= n / 2; ++s) out.push_back({SubgroupDescriptor::Kind::intransitive, s, 0, 0});
  for (int a = 2; a <= n / 2; ++a) {
    if (n % a == 0) out.push_back({SubgroupDescriptor::Kind::imprimitive, 0, a, n / a});
  }
  return out;
}

bool class_meets_descriptor(const Partition& cycle_type, const SubgroupDescriptor& d) {
  if (d.kind == SubgroupDescriptor::Kind::intransitive) return is_partial_sum(cycle_type, d.subset_size);
  return wreath_realizable(cycle_type, d.block_size, d.block_count);
}

DescriptorSearchResult max_family_intransitive_imprimitive(int n, const SearchOptions& options) {
  if (n < 5) throw std::invalid_argument("max_family_intransitive_imprimitive: n must be at least 5");
  if (n > options.cap) {
    throw std::length_error("max_family_intransitive_imprimitive: n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(options.cap));
  }
  const auto descriptors = intransitive_imprimitive_descriptors(n);
  std::map<std::uint64_t, std::size_t> index;
  std::vector<std::pair<std::uint64_t, Partition>> patterns;
  for (Partition& p : enumerate_partitions(n)) {
    std::uint64_t bits = 0;
    for (std::size_t d = 0; d < descriptors.size(); ++d) {
      if (class_meets_descriptor(p, descriptors[d])) bits |= std::uint64_t{1} << d;
    }
    if (index.emplace(bits, patterns.size()).second) patterns.emplace_back(bits, std::move(p));
  }
  std::stable_sort(patterns.begin(), patterns.end(), [](const auto& a, const auto& b) {
    if (std::popcount(a.first) != std::popcount(b.first)) return std::popcount(a.first) < std::popcount(b.first);
    return a.first < b.first;
  });

  detail::IndependenceProblem problem{static_cast<int>(descriptors.size()), {}, false};
  for (const auto& [bits, p] : patterns) problem.patterns.push_back(bits);

  DescriptorSearchResult result;
  result.n = n;
  int lower = 0;
  if (options.use_incumbent && n <= kDefaultEnumerationCap) {
    lower = max_family(n, {kDefaultEnumerationCap, options.threads, true}).t_max;
  }
  std::optional<detail::IndependentFamily> family;
  int size = std::min<int>(problem.universe, static_cast<int>(patterns.size()));
  for (; size > lower && !family; --size) {
    family = detail::find_independent_family(problem, size, options.threads, result.nodes_explored);
  }
  if (family) {
    result.t_max = size + 1;
  } else {
    family = detail::find_independent_family(problem, lower, options.threads, result.nodes_explored);
    if (!family) throw std::logic_error("max_family_intransitive_imprimitive: lower bound is infeasible");
    result.t_max = lower;
  }
  for (std::size_t k = 0; k < family->witnesses.size(); ++k) {
    result.classes.push_back(patterns[family->pattern_of[k]].second);
    result.subgroups.push_back(descriptors[static_cast<std::size_t>(family->witnesses[k])]);
  }
  return result;
}

}  // namespace migs
