#include "migs/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "migs/number_theory.hpp"

namespace migs {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ' || ch == '\t') {
      ++pos;
      continue;
    }
    if (ch != '(') fail("expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) fail("missing ')'");
    std::vector<int> cycle;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      int v = 0;
      for (char c : token) {
        if (c < '0' || c > '9') fail("non-numeric point");
        v = v * 10 + (c - '0');
        if (v > n) fail("point out of range");
      }
      if (v < 1) fail("point out of range");
      if (used[static_cast<std::size_t>(v - 1)]) fail("point repeated");
      used[static_cast<std::size_t>(v - 1)] = 1;
      cycle.push_back(v - 1);
      token.clear();
    };
    for (std::size_t k = pos + 1; k < close; ++k) {
      const char c = text[k];
      if (c == ' ' || c == ',' || c == '\t') {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.degree() != degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = other.images_[static_cast<std::size_t>(images_[i])];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Partition Permutation::cycle_type() const {
  if (images_.empty()) throw std::invalid_argument("cycle type of the empty permutation");
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> parts;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

Parity Permutation::parity() const { return migs::parity(cycle_type()); }

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 1) throw std::invalid_argument("group degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const int beta = g(level.base_point);
    const Permutation& u = level.transversal[static_cast<std::size_t>(beta)];
    if (u.degree() == 0) return {g, l};
    g = g.then(u.inverse());
  }
  return {g, levels_.size()};
}

void PermGroup::insert(std::size_t first, std::size_t last, const Permutation& g) {
  // g fixes the base points of levels below `last`, so it joins each of first..last.
  for (std::size_t l = last + 1; l-- > first;) add_generator(l, g);
}

void PermGroup::add_generator(std::size_t level, const Permutation& g) {
  if (level == levels_.size()) {
    Level fresh;
    for (int p = 0; p < degree_; ++p) {
      if (g(p) != p) {
        fresh.base_point = p;
        break;
      }
    }
    fresh.orbit = {fresh.base_point};
    fresh.transversal.assign(static_cast<std::size_t>(degree_), Permutation());
    fresh.transversal[static_cast<std::size_t>(fresh.base_point)] = Permutation::identity(degree_);
    levels_.push_back(std::move(fresh));
  }
  levels_[level].generators.push_back(g);

  // (orbit point, generator index) pairs whose Schreier generator is unchecked.
  std::vector<std::pair<int, std::size_t>> todo;
  const std::size_t newest = levels_[level].generators.size() - 1;
  for (int beta : levels_[level].orbit) todo.emplace_back(beta, newest);
  while (!todo.empty()) {
    const auto [beta, k] = todo.back();
    todo.pop_back();
    const Permutation s = levels_[level].generators[k];
    const int image = s(beta);
    const Permutation ub = levels_[level].transversal[static_cast<std::size_t>(beta)].then(s);
    if (levels_[level].transversal[static_cast<std::size_t>(image)].degree() == 0) {
      levels_[level].transversal[static_cast<std::size_t>(image)] = ub;
      levels_[level].orbit.push_back(image);
      for (std::size_t j = 0; j < levels_[level].generators.size(); ++j) todo.emplace_back(image, j);
      continue;
    }
    const Permutation schreier = ub.then(levels_[level].transversal[static_cast<std::size_t>(image)].inverse());
    auto [residue, stop] = sift(schreier, level + 1);
    if (!residue.is_identity()) insert(level + 1, stop, residue);
  }
}

void PermGroup::build() {
  if (built_) return;
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    auto [residue, stop] = sift(g, 0);
    if (!residue.is_identity()) insert(0, stop, residue);
  }
  base_.clear();
  for (const auto& level : levels_) base_.push_back(level.base_point);
  built_ = true;
}

std::uint64_t PermGroup::order() {
  build();
  std::uint64_t total = 1;
  for (const auto& level : levels_) {
    auto next = checked_mul(total, level.orbit.size());
    if (!next) throw std::overflow_error("group order exceeds 64 bits");
    total = *next;
  }
  return total;
}

const std::vector<int>& PermGroup::base() {
  build();
  return base_;
}

bool PermGroup::contains(const Permutation& g) {
  if (g.degree() != degree_) return false;
  build();
  return sift(g, 0).first.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> label(static_cast<std::size_t>(degree_), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree_; ++start) {
    if (label[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<int> orbit{start};
    label[static_cast<std::size_t>(start)] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : generators_) {
        const int image = g(orbit[k]);
        if (label[static_cast<std::size_t>(image)] == -1) {
          label[static_cast<std::size_t>(image)] = static_cast<int>(out.size());
          orbit.push_back(image);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

// Whether every block of `fine` lies inside a block of `coarse`.
bool refines(const BlockSystem& fine, const BlockSystem& coarse, int degree) {
  std::vector<int> owner(static_cast<std::size_t>(degree));
  for (std::size_t b = 0; b < coarse.size(); ++b) {
    for (int p : coarse[b]) owner[static_cast<std::size_t>(p)] = static_cast<int>(b);
  }
  for (const auto& block : fine) {
    for (int p : block) {
      if (owner[static_cast<std::size_t>(p)] != owner[static_cast<std::size_t>(block.front())]) return false;
    }
  }
  return true;
}

}  // namespace

BlockSystem minimal_block_system(int degree, const std::vector<Permutation>& generators, int a, int b) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> queue{{a, b}};
  parent[static_cast<std::size_t>(find_root(parent, b))] = find_root(parent, a);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto [x, y] = queue[k];
    for (const auto& g : generators) {
      const int rx = find_root(parent, g(x));
      const int ry = find_root(parent, g(y));
      if (rx == ry) continue;
      parent[static_cast<std::size_t>(ry)] = rx;
      queue.emplace_back(g(x), g(y));
    }
  }
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(degree));
  for (int p = 0; p < degree; ++p) by_root[static_cast<std::size_t>(find_root(parent, p))].push_back(p);
  BlockSystem system;
  for (auto& block : by_root) {
    if (!block.empty()) system.push_back(std::move(block));
  }
  std::sort(system.begin(), system.end());
  return system;
}

std::vector<BlockSystem> PermGroup::minimal_blocks() const {
  if (!is_transitive()) throw std::invalid_argument("minimal_blocks: group is intransitive");
  std::vector<BlockSystem> systems;
  for (int b = 1; b < degree_; ++b) {
    BlockSystem s = minimal_block_system(degree_, generators_, 0, b);
    if (s.size() == 1) continue;
    if (std::find(systems.begin(), systems.end(), s) == systems.end()) systems.push_back(std::move(s));
  }
  std::vector<BlockSystem> minimal;
  for (const auto& s : systems) {
    const bool has_finer = std::any_of(systems.begin(), systems.end(), [&](const BlockSystem& other) {
      return other != s && refines(other, s, degree_);
    });
    if (!has_finer) minimal.push_back(s);
  }
  return minimal;
}

bool PermGroup::is_primitive() const { return is_transitive() && minimal_blocks().empty(); }

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit, std::uint64_t limit) {
  if (order() > limit) throw std::length_error("group too large to enumerate");
  // Every element is u_{k-1} * ... * u_0 with u_l a transversal element of level l.
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t l, const Permutation& prefix) {
    if (l == 0) {
      visit(prefix);
      return;
    }
    const Level& level = levels_[l - 1];
    for (int p : level.orbit) walk(l - 1, prefix.then(level.transversal[static_cast<std::size_t>(p)]));
  };
  walk(levels_.size(), Permutation::identity(degree_));
}

}  // namespace migs
