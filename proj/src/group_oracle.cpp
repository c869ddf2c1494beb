#include "migs/group_oracle.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "migs/number_theory.hpp"

namespace migs {

namespace detail {
extern const std::string_view kBuiltinDatasetText;
}

std::string to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::intransitive: return "intransitive";
    case SubgroupKind::imprimitive: return "imprimitive";
    case SubgroupKind::affine: return "affine";
    case SubgroupKind::almost_simple: return "almost_simple";
    case SubgroupKind::diagonal: return "diagonal";
    case SubgroupKind::product: return "product";
  }
  return "unknown";
}

SubgroupKind parse_subgroup_kind(std::string_view text) {
  for (auto k : {SubgroupKind::intransitive, SubgroupKind::imprimitive, SubgroupKind::affine,
                 SubgroupKind::almost_simple, SubgroupKind::diagonal, SubgroupKind::product}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown subgroup kind '" + std::string(text) + "'");
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Permutation of {0..n-1} cycling points first, first+1, ..., first+len-1.
Permutation cycle_on(int n, int first, int len) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (int k = 0; k < len; ++k) images[static_cast<std::size_t>(first + k)] = first + (k + 1) % len;
  return Permutation(std::move(images));
}

int count_classes(PermGroup& group) {
  std::map<std::vector<int>, int> index;
  std::vector<Permutation> elements;
  group.for_each_element([&](const Permutation& g) {
    index.emplace(g.images(), static_cast<int>(elements.size()));
    elements.push_back(g);
  });
  std::vector<int> parent(elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int classes = static_cast<int>(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : group.generators()) {
      const Permutation conj = s.inverse().then(elements[i]).then(s);
      const int a = root(static_cast<int>(i));
      const int b = root(index.at(conj.images()));
      if (a != b) {
        parent[static_cast<std::size_t>(b)] = a;
        --classes;
      }
    }
  }
  return classes;
}

void self_check(MaximalSubgroupRecord& record) {
  PermGroup group(record.n, record.generators);
  const std::uint64_t order = group.order();
  if (order != record.expected_order) {
    throw DatasetError("record " + record.label + ": computed order " + std::to_string(order) + " but expected " +
                       std::to_string(record.expected_order));
  }
  const bool transitive = group.is_transitive();
  switch (record.kind) {
    case SubgroupKind::intransitive:
      if (transitive) throw DatasetError("record " + record.label + " is transitive");
      break;
    case SubgroupKind::imprimitive:
      if (!transitive || group.is_primitive()) throw DatasetError("record " + record.label + " is not imprimitive");
      break;
    default:
      if (!group.is_primitive()) throw DatasetError("record " + record.label + " is not primitive");
  }
  if (record.kind != SubgroupKind::intransitive && record.kind != SubgroupKind::imprimitive && !record.alternating) {
    std::set<Partition> types;
    group.for_each_element([&](const Permutation& g) { types.insert(g.cycle_type()); });
    record.cycle_types.assign(types.begin(), types.end());
    record.class_count = count_classes(group);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view text, int line) {
  std::uint64_t v = 0;
  if (text.empty()) throw DatasetError("line " + std::to_string(line) + ": expected a number");
  for (char c : text) {
    if (c < '0' || c > '9') throw DatasetError("line " + std::to_string(line) + ": expected a number");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

MaximalSubgroupRecord make_intransitive_record(int n, int s) {
  if (s < 1 || 2 * s >= n) throw std::invalid_argument("intransitive record needs 1 <= s < n/2");
  MaximalSubgroupRecord r;
  r.n = n;
  r.label = "intransitive(" + std::to_string(s) + ")";
  r.kind = SubgroupKind::intransitive;
  r.subset_size = s;
  r.expected_order = factorial(s) * factorial(n - s);
  if (s >= 2) {
    r.generators.push_back(cycle_on(n, 0, 2));
    r.generators.push_back(cycle_on(n, 0, s));
  }
  r.generators.push_back(cycle_on(n, s, 2));
  r.generators.push_back(cycle_on(n, s, n - s));
  return r;
}

MaximalSubgroupRecord make_imprimitive_record(int block_size, int block_count) {
  if (block_size < 2 || block_count < 2) throw std::invalid_argument("imprimitive record needs a, b >= 2");
  const int n = block_size * block_count;
  MaximalSubgroupRecord r;
  r.n = n;
  r.label = "imprimitive(" + std::to_string(block_size) + "," + std::to_string(block_count) + ")";
  r.kind = SubgroupKind::imprimitive;
  r.block_size = block_size;
  r.block_count = block_count;
  std::uint64_t order = factorial(block_count);
  for (int b = 0; b < block_count; ++b) order *= factorial(block_size);
  r.expected_order = order;
  r.generators.push_back(cycle_on(n, 0, 2));
  r.generators.push_back(cycle_on(n, 0, block_size));
  // Block k is {k*a, ..., k*a + a - 1}; shift blocks cyclically and swap the first two.
  std::vector<int> shift(static_cast<std::size_t>(n));
  std::vector<int> swap(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    const int block = p / block_size;
    const int offset = p % block_size;
    shift[static_cast<std::size_t>(p)] = ((block + 1) % block_count) * block_size + offset;
    const int swapped = block == 0 ? 1 : (block == 1 ? 0 : block);
    swap[static_cast<std::size_t>(p)] = swapped * block_size + offset;
  }
  r.generators.emplace_back(std::move(shift));
  r.generators.emplace_back(std::move(swap));
  return r;
}

MaximalSubgroupRecord make_alternating_record(int n) {
  if (n < 3) throw std::invalid_argument("alternating record needs n >= 3");
  MaximalSubgroupRecord r;
  r.n = n;
  r.label = "A_" + std::to_string(n);
  r.kind = SubgroupKind::almost_simple;
  r.alternating = true;
  r.expected_order = factorial(n) / 2;
  r.generators.push_back(cycle_on(n, 0, 3));
  r.generators.push_back(n % 2 == 1 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1));
  return r;
}

SubgroupDataset SubgroupDataset::parse(std::string_view text) {
  std::map<int, std::vector<MaximalSubgroupRecord>> primitive;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool versioned = false;
  std::optional<MaximalSubgroupRecord> current;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t space = line.find(' ');
    const std::string_view key = line.substr(0, space);
    const std::string_view value = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!versioned) {
      if (key != "version" || value != "1") throw DatasetError(where + "expected 'version 1'");
      versioned = true;
      continue;
    }
    if (key == "record") {
      if (current) throw DatasetError(where + "nested record");
      current.emplace();
      continue;
    }
    if (!current) throw DatasetError(where + "'" + std::string(key) + "' outside a record");
    if (key == "degree") {
      current->n = static_cast<int>(parse_u64(value, line_no));
    } else if (key == "label") {
      current->label = std::string(value);
    } else if (key == "kind") {
      try {
        current->kind = parse_subgroup_kind(value);
      } catch (const std::invalid_argument& e) {
        throw DatasetError(where + e.what());
      }
    } else if (key == "order") {
      current->expected_order = parse_u64(value, line_no);
    } else if (key == "generator") {
      if (current->n < 1) throw DatasetError(where + "generator before degree");
      try {
        current->generators.push_back(Permutation::parse_cycles(value, current->n));
      } catch (const std::invalid_argument& e) {
        throw DatasetError(where + e.what());
      }
    } else if (key == "end") {
      if (current->n < 1 || current->label.empty() || current->expected_order == 0) {
        throw DatasetError(where + "record missing degree, label or order");
      }
      self_check(*current);
      primitive[current->n].push_back(std::move(*current));
      current.reset();
    } else {
      throw DatasetError(where + "unknown key '" + std::string(key) + "'");
    }
  }
  if (!versioned) throw DatasetError("dataset has no version line");
  if (current) throw DatasetError("unterminated record");

  SubgroupDataset out;
  for (auto& [n, prims] : primitive) {
    auto& records = out.by_degree_[n];
    for (int s = 1; 2 * s < n; ++s) records.push_back(make_intransitive_record(n, s));
    for (int a = 2; a <= n / 2; ++a) {
      if (n % a == 0) records.push_back(make_imprimitive_record(a, n / a));
    }
    for (auto& r : records) self_check(r);
    for (auto& r : prims) records.push_back(std::move(r));
    MaximalSubgroupRecord alt = make_alternating_record(n);
    self_check(alt);
    records.push_back(std::move(alt));
  }
  return out;
}

SubgroupDataset SubgroupDataset::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

int SubgroupDataset::min_degree() const { return by_degree_.empty() ? 0 : by_degree_.begin()->first; }
int SubgroupDataset::max_degree() const { return by_degree_.empty() ? 0 : by_degree_.rbegin()->first; }

const std::vector<MaximalSubgroupRecord>& SubgroupDataset::records(int n) const {
  auto it = by_degree_.find(n);
  if (it == by_degree_.end()) {
    throw std::out_of_range("degree " + std::to_string(n) + " is outside the dataset range [" +
                            std::to_string(min_degree()) + ", " + std::to_string(max_degree()) + "]");
  }
  return it->second;
}

const SubgroupDataset& builtin_dataset() {
  static const SubgroupDataset dataset = SubgroupDataset::parse(detail::kBuiltinDatasetText);
  return dataset;
}

bool class_meets_subgroup(const Partition& cycle_type, const MaximalSubgroupRecord& record) {
  if (cycle_type.degree() != record.n) throw std::invalid_argument("class_meets_subgroup: degree mismatch");
  if (record.alternating) return parity(cycle_type) == Parity::even;
  switch (record.kind) {
    case SubgroupKind::intransitive: return is_partial_sum(cycle_type, record.subset_size);
    case SubgroupKind::imprimitive: return wreath_realizable(cycle_type, record.block_size, record.block_count);
    default: break;
  }
  if (record.cycle_types.empty()) {
    throw std::invalid_argument("record " + record.label + " has no element listing");
  }
  return std::binary_search(record.cycle_types.begin(), record.cycle_types.end(), cycle_type);
}

namespace {

bool meets_all(const MaximalSubgroupRecord& record, const std::vector<Partition>& classes, std::size_t skip) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i != skip && !class_meets_subgroup(classes[i], record)) return false;
  }
  return true;
}

void check_degrees(int n, const std::vector<Partition>& classes) {
  for (const auto& c : classes) {
    if (c.degree() != n) throw std::invalid_argument("class " + c.to_string() + " is not a partition of " +
                                                     std::to_string(n));
  }
}

}  // namespace

InvariableResult invariably_generates(int n, const std::vector<Partition>& classes, const SubgroupDataset& dataset) {
  check_degrees(n, classes);
  InvariableResult result;
  for (const auto& record : dataset.records(n)) {
    if (meets_all(record, classes, classes.size())) {
      result.witness = record;
      return result;
    }
  }
  result.generates = true;
  return result;
}

MigCertificate is_mig_set(int n, const std::vector<Partition>& classes, const SubgroupDataset& dataset) {
  MigCertificate cert;
  InvariableResult gen = invariably_generates(n, classes, dataset);
  cert.generates = gen.generates;
  cert.overgroup = std::move(gen.witness);
  bool minimal = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::optional<MaximalSubgroupRecord> found;
    for (const auto& record : dataset.records(n)) {
      if (!class_meets_subgroup(classes[i], record) && meets_all(record, classes, i)) {
        found = record;
        break;
      }
    }
    minimal = minimal && found.has_value();
    cert.subgroups.push_back(std::move(found));
  }
  cert.is_mig = cert.generates && minimal;
  return cert;
}

std::vector<Partition> cycle_types_meeting_at_least(int n, int threshold, bool count_alternating,
                                                    const SubgroupDataset& dataset) {
  std::vector<Partition> out;
  for (const Partition& p : enumerate_partitions(n)) {
    if (p == Partition::identity(n)) continue;
    int meets = 0;
    for (const auto& record : dataset.records(n)) {
      if (record.alternating && !count_alternating) continue;
      if (class_meets_subgroup(p, record)) ++meets;
    }
    if (meets >= threshold) out.push_back(p);
  }
  return out;
}

MigScan find_mig_set_of_size(int n, int size, const SubgroupDataset& dataset) {
  std::vector<Partition> types;
  for (const Partition& p : enumerate_partitions(n)) {
    if (p != Partition::identity(n)) types.push_back(p);
  }
  MigScan scan;
  scan.n = n;
  scan.size = size;
  if (size < 1 || size > static_cast<int>(types.size())) return scan;
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  const int total = static_cast<int>(types.size());
  while (true) {
    std::vector<Partition> chosen;
    for (int i : idx) chosen.push_back(types[static_cast<std::size_t>(i)]);
    ++scan.sets_checked;
    if (is_mig_set(n, chosen, dataset).is_mig) {
      scan.found = true;
      scan.example = std::move(chosen);
      return scan;
    }
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == total - size + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return scan;
}

}  // namespace migs
