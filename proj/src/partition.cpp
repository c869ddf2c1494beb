#include "migs/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "migs/number_theory.hpp"

namespace migs {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed partition '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// words |= words << shift, truncated to nbits.
void shift_or(std::vector<std::uint64_t>& words, int shift, int nbits) {
  const int word_shift = shift / 64;
  const int bit_shift = shift % 64;
  for (int w = static_cast<int>(words.size()) - 1; w >= word_shift; --w) {
    std::uint64_t v = words[w - word_shift] << bit_shift;
    if (bit_shift != 0 && w - word_shift - 1 >= 0) {
      v |= words[w - word_shift - 1] >> (64 - bit_shift);
    }
    words[w] |= v;
  }
  const int tail = nbits % 64;
  if (tail != 0) words.back() &= (std::uint64_t{1} << tail) - 1;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  long long total = 0;
  for (int a : parts_) {
    if (a < 1) throw std::invalid_argument("partition parts must be positive");
    total += a;
  }
  if (total > std::numeric_limits<int>::max()) throw std::invalid_argument("partition too large");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = static_cast<int>(total);
}

Partition Partition::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity partition needs n >= 1");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::parse(std::string_view text, std::optional<int> degree) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find_first_of(", \t", pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view token = trim(body.substr(pos, end - pos));
    pos = end + 1;
    if (token.empty()) continue;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      exponent = parse_int(trim(token.substr(caret + 1)), text);
      token = trim(token.substr(0, caret));
      if (exponent < 0) throw std::invalid_argument("negative exponent in '" + std::string(text) + "'");
    }
    const int part = parse_int(token, text);
    if (part < 1) throw std::invalid_argument("partition parts must be positive: '" + std::string(text) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(exponent), part);
  }
  if (degree) {
    const long long sum = std::accumulate(parts.begin(), parts.end(), 0LL);
    if (sum > *degree) {
      throw std::invalid_argument("partition '" + std::string(text) + "' exceeds degree " + std::to_string(*degree));
    }
    parts.insert(parts.end(), static_cast<std::size_t>(*degree - sum), 1);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i != 0) out << ',';
    out << parts_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(current);
      return;
    }
    for (int a = std::min(rest, max_part); a >= 1; --a) {
      current.push_back(a);
      self(self, rest - a, a);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

PartialSumMask::PartialSumMask(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
  if (words_.size() != static_cast<std::size_t>(n / 64 + 1)) {
    throw std::invalid_argument("PartialSumMask: word count does not match degree");
  }
}

bool PartialSumMask::test(int i) const {
  if (i < 0 || i > n_) return false;
  return (words_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1U;
}

std::vector<int> PartialSumMask::missing(int lo, int hi) const {
  std::vector<int> out;
  for (int i = std::max(lo, 0); i <= std::min(hi, n_); ++i) {
    if (!test(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> PartialSumMask::present(int lo, int hi) const {
  std::vector<int> out;
  for (int i = std::max(lo, 0); i <= std::min(hi, n_); ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

std::uint64_t PartialSumMask::restricted_bits() const {
  const int h = n_ / 2;
  if (h > 64) throw std::length_error("restricted mask wider than 64 bits");
  std::uint64_t bits = 0;
  for (int i = 1; i <= h; ++i) {
    if (test(i)) bits |= std::uint64_t{1} << (i - 1);
  }
  return bits;
}

std::string PartialSumMask::to_bitstring() const {
  std::string s(static_cast<std::size_t>(n_ + 1), '0');
  for (int i = 0; i <= n_; ++i) {
    if (test(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

PartialSumMask partial_sums(const Partition& p, int degree_cap) {
  const int n = p.degree();
  if (n > degree_cap) {
    throw std::length_error("degree " + std::to_string(n) + " exceeds cap " + std::to_string(degree_cap));
  }
  std::vector<std::uint64_t> words(static_cast<std::size_t>(n / 64 + 1), 0);
  words[0] = 1;
  for (int a : p.parts()) shift_or(words, a, n + 1);
  return PartialSumMask(n, std::move(words));
}

bool is_partial_sum(const Partition& p, int i) {
  if (i < 0 || i > p.degree()) {
    throw std::out_of_range("partial sum index " + std::to_string(i) + " outside [0, " +
                            std::to_string(p.degree()) + "]");
  }
  return partial_sums(p).test(i);
}

Parity parity(const Partition& p) {
  const int even_parts = static_cast<int>(
      std::count_if(p.parts().begin(), p.parts().end(), [](int a) { return a % 2 == 0; }));
  return even_parts % 2 == 1 ? Parity::odd : Parity::even;
}

Partition power_type(const Partition& p, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("power_type: exponent must be positive");
  std::vector<int> parts;
  for (int a : p.parts()) {
    const int g = static_cast<int>(std::gcd(static_cast<std::uint64_t>(a), k));
    parts.insert(parts.end(), static_cast<std::size_t>(g), a / g);
  }
  return Partition(std::move(parts));
}

namespace {

// True iff q is the type of some power of a permutation of type p. The type of
// sigma^k depends only on gcd(a, k) for each part a, hence only on the exponent
// of each prime of lcm(parts) in k; all such exponent vectors are scanned.
bool is_power_of(const Partition& p, const Partition& q) {
  if (q.length() < p.length()) return false;
  std::map<u64, int> lcm_exponents;
  for (int a : p.parts()) {
    for (const auto& [prime, e] : factorize(static_cast<u64>(a))) {
      auto& slot = lcm_exponents[prime];
      slot = std::max(slot, e);
    }
  }
  std::vector<PrimePower> primes;
  double divisor_count = 1;
  for (const auto& [prime, e] : lcm_exponents) {
    primes.push_back({prime, e});
    divisor_count *= e + 1;
  }
  if (divisor_count > 1e7) throw std::length_error("equivalent_types: order has too many divisors to scan");

  std::vector<int> chosen(primes.size(), 0);
  auto part_gcd = [&](int a) {
    int g = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      int e = 0;
      int rest = a;
      while (e < chosen[i] && rest % static_cast<int>(primes[i].prime) == 0) {
        rest /= static_cast<int>(primes[i].prime);
        g *= static_cast<int>(primes[i].prime);
        ++e;
      }
    }
    return g;
  };
  while (true) {
    std::vector<int> parts;
    for (int a : p.parts()) {
      const int g = part_gcd(a);
      parts.insert(parts.end(), static_cast<std::size_t>(g), a / g);
    }
    if (Partition(std::move(parts)) == q) return true;
    std::size_t i = 0;
    while (i < primes.size() && chosen[i] == primes[i].exponent) chosen[i++] = 0;
    if (i == primes.size()) return false;
    ++chosen[i];
  }
}

}  // namespace

bool equivalent_types(const Partition& p, const Partition& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("equivalent_types: degree mismatch");
  return is_power_of(p, q) || is_power_of(q, p);
}

std::optional<int> jordan_witness(const Partition& p) {
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int l = parts[i];
    if (i > 0 && parts[i - 1] == l) continue;
    if (!is_prime(static_cast<u64>(l)) || p.multiplicity(l) != 1 || p.degree() - l < 3) continue;
    const bool divides_other = std::any_of(parts.begin(), parts.end(), [&](int a) { return a != l && a % l == 0; });
    if (!divides_other) return l;
  }
  return std::nullopt;
}

namespace {

// Cycles are grouped by the block cycle they run along: a block cycle of
// length m carries cycles whose lengths are m times the cycle lengths of a
// permutation of one block, so each group has lengths divisible by m and the
// quotients sum to the block size.
class WreathSolver {
 public:
  WreathSolver(const Partition& p, int block_size) : block_size_(block_size) {
    for (int a : p.parts()) {
      if (lengths_.empty() || lengths_.back() != a) {
        lengths_.push_back(a);
        counts_.push_back(0);
      }
      ++counts_.back();
    }
  }

  bool solve() {
    std::size_t first = 0;
    while (first < counts_.size() && counts_[first] == 0) ++first;
    if (first == counts_.size()) return true;
    if (auto it = memo_.find(counts_); it != memo_.end()) return it->second;
    const std::vector<int> key = counts_;

    const int lead = lengths_[first];
    --counts_[first];
    bool found = false;
    for (u64 dm : divisors(static_cast<u64>(lead))) {
      const int m = static_cast<int>(dm);
      if (lead / m > block_size_) continue;
      if (fill(first, m, block_size_ - lead / m)) {
        found = true;
        break;
      }
    }
    ++counts_[first];
    memo_.emplace(key, found);
    return found;
  }

 private:
  // Pick further cycles (lengths divisible by m, indices >= from) whose
  // quotients by m add up to `remaining`, then recurse on what is left.
  bool fill(std::size_t from, int m, int remaining) {
    if (remaining == 0) return solve();
    for (std::size_t j = from; j < lengths_.size(); ++j) {
      if (counts_[j] == 0 || lengths_[j] % m != 0) continue;
      const int unit = lengths_[j] / m;
      if (unit > remaining) continue;
      const int max_take = std::min(counts_[j], remaining / unit);
      for (int take = max_take; take >= 1; --take) {
        counts_[j] -= take;
        const bool ok = fill(j + 1, m, remaining - take * unit);
        counts_[j] += take;
        if (ok) return true;
      }
    }
    return false;
  }

  int block_size_;
  std::vector<int> lengths_;
  std::vector<int> counts_;
  std::map<std::vector<int>, bool> memo_;
};

}  // namespace

bool wreath_realizable(const Partition& p, int block_size, int block_count) {
  if (block_size < 2 || block_count < 2) throw std::invalid_argument("wreath_realizable: a and b must be >= 2");
  if (static_cast<long long>(block_size) * block_count != p.degree()) {
    throw std::invalid_argument("wreath_realizable: a*b must equal the degree");
  }
  return WreathSolver(p, block_size).solve();
}

}  // namespace migs
