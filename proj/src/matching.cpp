#include "migs/matching.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace migs {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteMatcher::BipartiteMatcher(int left, int right)
    : left_(left), right_(right), adj_(static_cast<std::size_t>(left)) {
  if (left < 0 || right < 0) throw std::invalid_argument("BipartiteMatcher: negative side");
}

void BipartiteMatcher::add_edge(int u, int v) {
  if (u < 0 || u >= left_ || v < 0 || v >= right_) {
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of bounds");
  }
  adj_[static_cast<std::size_t>(u)].push_back(v);
}

bool BipartiteMatcher::bfs() {
  std::queue<int> queue;
  bool reachable_free = false;
  for (int u = 0; u < left_; ++u) {
    if (match_left_[u] == kUnmatched) {
      level_[u] = 0;
      queue.push(u);
    } else {
      level_[u] = kInf;
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : adj_[u]) {
      const int w = match_right_[v];
      if (w == kUnmatched) {
        reachable_free = true;
      } else if (level_[w] == kInf) {
        level_[w] = level_[u] + 1;
        queue.push(w);
      }
    }
  }
  return reachable_free;
}

bool BipartiteMatcher::dfs(int u) {
  for (int v : adj_[u]) {
    const int w = match_right_[v];
    if (w == kUnmatched || (level_[w] == level_[u] + 1 && dfs(w))) {
      match_left_[u] = v;
      match_right_[v] = u;
      return true;
    }
  }
  level_[u] = kInf;
  return false;
}

int BipartiteMatcher::solve() {
  match_left_.assign(static_cast<std::size_t>(left_), kUnmatched);
  match_right_.assign(static_cast<std::size_t>(right_), kUnmatched);
  level_.assign(static_cast<std::size_t>(left_), kInf);
  int size = 0;
  while (bfs()) {
    for (int u = 0; u < left_; ++u) {
      if (match_left_[u] == kUnmatched && dfs(u)) ++size;
    }
  }
  return size;
}

}  // namespace migs
