#pragma once

#include <vector>

namespace migs {

/// Hopcroft-Karp maximum matching on a bipartite graph with vertices
/// 0..left-1 and 0..right-1.
class BipartiteMatcher {
 public:
  static constexpr int kUnmatched = -1;

  BipartiteMatcher(int left, int right);

  void add_edge(int u, int v);

  /// Size of a maximum matching; afterwards match_of_left() is populated.
  int solve();

  const std::vector<int>& match_of_left() const { return match_left_; }

 private:
  bool bfs();
  bool dfs(int u);

  int left_;
  int right_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> level_;
};

}  // namespace migs
