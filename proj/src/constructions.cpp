#include "migs/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "migs/family_search.hpp"
#include "migs/group_oracle.hpp"

namespace migs {

void Certificate::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Certificate::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void Certificate::require() const {
  std::string failures;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!failures.empty()) failures += "; ";
    failures += c.name + (c.detail.empty() ? "" : ": " + c.detail);
  }
  if (!failures.empty()) throw VerificationError(failures);
}

std::string to_string(LemmaCase c) {
  switch (c) {
    case LemmaCase::generic: return "generic";
    case LemmaCase::n_eq_4i_plus_2: return "n_eq_4i_plus_2";
    case LemmaCase::n_eq_4i_plus_4: return "n_eq_4i_plus_4";
    case LemmaCase::eight_one: return "eight_one";
  }
  return "unknown";
}

std::string to_string(RepairCase c) {
  switch (c) {
    case RepairCase::small_n: return "small_n";
    case RepairCase::case1_z_added: return "case1_z_added";
    case RepairCase::case2_rebuilt: return "case2_rebuilt";
  }
  return "unknown";
}

namespace {

std::string join(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(values[k]);
  }
  return out + "}";
}

void ensure(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("build_x_family: " + what);
}

Partition with_fixed_points(int part, int fixed) {
  std::vector<int> parts{part};
  parts.insert(parts.end(), static_cast<std::size_t>(fixed), 1);
  return Partition(std::move(parts));
}

}  // namespace

LemmaPartition lemma_partition(int i, int n) {
  if (i < 1 || 3 * static_cast<long long>(i) >= n) {
    throw std::invalid_argument("lemma_partition: need 1 <= i < n/3, got i = " + std::to_string(i) +
                                ", n = " + std::to_string(n));
  }
  LemmaPartition lp;
  lp.i = i;
  lp.n = n;
  if (n == 4 * i + 2) lp.case_tag = LemmaCase::n_eq_4i_plus_2;
  if (n == 4 * i + 4) lp.case_tag = (n == 8 && i == 1) ? LemmaCase::eight_one : LemmaCase::n_eq_4i_plus_4;

  std::vector<int> parts(static_cast<std::size_t>(i - 1), 1);
  if (lp.case_tag == LemmaCase::n_eq_4i_plus_4) {
    parts.insert(parts.end(), {i + 1, i + 3, i + 1});
    lp.p = Partition(std::move(parts));
    return lp;
  }
  parts.push_back(i + 1);
  int q = 2 * i;
  if (n - q == 2 * i + 2) {
    parts.push_back(i + 1);
    q += i + 1;
  } else if (n - q >= 2 * i + 3) {
    parts.push_back(i + 2);
    q += i + 2;
    while (n - q >= 2 * i + 2) {
      parts.push_back(i + 1);
      q += i + 1;
    }
  }
  parts.push_back(n - q);
  lp.p = Partition(std::move(parts));
  return lp;
}

LemmaCertificate verify_lemma(const LemmaPartition& lp) {
  LemmaCertificate cert;
  const int n = lp.n;
  const int i = lp.i;
  cert.add("degree", lp.p.degree() == n, "sum of parts " + std::to_string(lp.p.degree()));
  if (lp.p.degree() != n) return cert;
  cert.mask = partial_sums(lp.p);
  cert.missing = cert.mask.missing(1, n - 1);
  cert.expected_missing = {i, n - i};
  if (n == 4 * i + 2 || (n == 8 && i == 1)) cert.expected_missing = {i, n / 2, n - i};
  const bool ok = cert.missing == cert.expected_missing;
  cert.add("missing_sums", ok, "missing " + join(cert.missing) + ", expected " + join(cert.expected_missing));
  return cert;
}

std::optional<int> XFamily::witness_of(const Partition& member) const {
  for (std::size_t k = 0; k < members.size() && k < witnesses.size(); ++k) {
    if (members[k] == member) return witnesses[k];
  }
  return std::nullopt;
}

Partition modified_x1(int n) {
  if (n < 13) throw std::invalid_argument("modified_x1: needs n >= 13");
  std::vector<int> base;
  if (n == 14 || n == 16) {
    base = {3, 5};
  } else if (n <= 17) {
    base = {3};
  } else {
    base = n % 2 == 0 ? std::vector<int>{3, 7} : std::vector<int>{3, 3, 7};
  }
  int rest = n;
  for (int a : base) rest -= a;
  // k + j odd makes the number of even parts odd.
  const int j = (rest / 2) % 2 == 1 ? 0 : 1;
  const int k = (rest - 4 * j) / 2;
  base.insert(base.end(), static_cast<std::size_t>(k), 2);
  if (j == 1) base.push_back(4);
  return Partition(std::move(base));
}

std::vector<int> least_witnesses(const std::vector<Partition>& members, int n) {
  const int h = n / 2;
  std::vector<PartialSumMask> masks;
  for (const auto& p : members) masks.push_back(partial_sums(p));
  std::vector<int> out;
  for (std::size_t x = 0; x < members.size(); ++x) {
    int found = 0;
    for (int i = 1; i <= h && found == 0; ++i) {
      if (masks[x].test(i)) continue;
      bool everywhere = true;
      for (std::size_t y = 0; y < members.size() && everywhere; ++y) {
        if (y != x && !masks[y].test(i)) everywhere = false;
      }
      if (everywhere) found = i;
    }
    out.push_back(found);
  }
  return out;
}

XFamily build_x_family(int n) {
  if (n < 5) throw std::invalid_argument("build_x_family: needs n >= 5, got " + std::to_string(n));
  XFamily xf;
  xf.n = n;
  if (n <= 10) {
    SearchOptions options;
    options.use_incumbent = false;
    const SearchResult best = max_family(n, options);
    // Largest family that is also a MIG-set; n = 6 has none.
    auto generates = [n](const std::vector<Partition>& family) { return is_mig_set(n, family).is_mig; };
    for (int size = best.t_max; size >= 2; --size) {
      if (auto found = find_family_of_size(n, size, generates)) {
        xf.members = found->optimal_family;
        xf.witnesses = found->witnesses;
        return xf;
      }
    }
    xf.members = best.optimal_family;
    xf.witnesses = best.witnesses;
    return xf;
  }
  if (n == 11 || n == 12) {
    if (n == 11) {
      xf.members = {Partition({4, 3, 2, 2}), Partition({4, 3, 3, 1}), Partition({9, 1, 1})};
    } else {
      xf.members = {Partition({5, 3, 2, 2}), Partition({4, 4, 3, 1}), Partition({10, 1, 1})};
    }
    xf.witnesses = least_witnesses(xf.members, n);
    return xf;
  }

  struct Item {
    long long t;
    Partition p;
    long long alpha;  // 0 for x_t = p_{t,n}
  };
  const Partition x1 = modified_x1(n);
  std::vector<Item> items;
  const long long third = ceil_div(n, 3);
  for (long long t = 1; t < third; ++t) {
    items.push_back({t, t == 1 ? x1 : lemma_partition(static_cast<int>(t), n).p, 0});
  }
  while (6LL << (xf.m + 1) <= n) ++xf.m;
  ensure(xf.m >= 1, "m must be positive");
  for (int j = 1; j <= xf.m; ++j) {
    const long long d = 6LL << (j - 1);
    const long long alpha = ceil_div(n - d, d);
    const Rational tj{(d - 1) * n, 2 * d};
    ensure(alpha >= 1 && 6 * alpha < n, "alpha_j < n/6");
    const long long lo = j == 1 ? third : xf.tvals.back().floor() + 1;
    const long long hi = tj.floor();
    for (long long t = lo; t <= hi; ++t) {
      const long long c = n - alpha - t;
      ensure(c > t && t > alpha, "c_t > t > alpha_j");
      std::vector<int> parts = lemma_partition(static_cast<int>(alpha), static_cast<int>(alpha + t)).p.parts();
      parts.push_back(static_cast<int>(c));
      items.push_back({t, Partition(std::move(parts)), alpha});
    }
    xf.alpha.push_back(alpha);
    xf.tvals.push_back(tj);
  }
  const long long tm = xf.tvals.back().floor();
  ensure(static_cast<long long>(items.size()) == tm, "|X_0| = floor(t_m)");
  for (std::size_t k = 0; k < items.size(); ++k) ensure(items[k].t == static_cast<long long>(k) + 1, "t runs 1..t_m");
  ensure(2 * tm > n - 6, "floor(t_m) > n/2 - 3");

  const std::set<long long> removed(xf.alpha.begin(), xf.alpha.end());
  std::erase_if(items, [&](const Item& it) { return removed.count(it.t) != 0; });

  const int h = n / 2;
  std::vector<PartialSumMask> masks;
  for (const auto& it : items) masks.push_back(partial_sums(it.p));
  std::optional<long long> common;
  for (long long i = tm + 1; i <= h && !common; ++i) {
    if (std::all_of(masks.begin(), masks.end(), [&](const PartialSumMask& m) { return m.test(static_cast<int>(i)); })) {
      common = i;
    }
  }

  if (common) {
    ensure(*common == tm + 1, "least common sum above t_m is floor(t_m) + 1");
    ensure(removed.count(1) == 0, "x_1 kept");
    xf.repair_case = RepairCase::case1_z_added;
    xf.z = with_fixed_points(static_cast<int>(n - tm), static_cast<int>(tm));
    for (const auto& it : items) {
      xf.members.push_back(it.p);
      xf.witnesses.push_back(static_cast<int>(it.t));
    }
    xf.members.push_back(*xf.z);
    xf.witnesses.push_back(static_cast<int>(tm + 1));
    return xf;
  }

  ensure(n == (6 << xf.m), "no common sum above t_m only when n = 6 * 2^m");
  ensure(removed.count(1) == 1, "alpha_m = 1");
  const auto ones = std::count_if(items.begin(), items.end(), [](const Item& it) { return it.alpha == 1; });
  ensure(ones == 1, "a unique member built from p_{1,1+t}");
  std::erase_if(items, [](const Item& it) { return it.alpha == 1; });
  xf.repair_case = RepairCase::case2_rebuilt;
  xf.z = with_fixed_points(n / 2 + 2, n / 2 - 2);
  xf.members.push_back(x1);
  xf.witnesses.push_back(1);
  for (const auto& it : items) {
    xf.members.push_back(it.p);
    xf.witnesses.push_back(static_cast<int>(it.t));
  }
  xf.members.push_back(*xf.z);
  xf.witnesses.push_back(n / 2 - 1);
  return xf;
}

FamilyCertificate verify_x_family(const XFamily& xf) {
  FamilyCertificate cert;
  const int n = xf.n;
  const int h = n / 2;
  const auto t = static_cast<long long>(xf.members.size());
  bool degrees = n >= 2 && t > 0;
  for (const auto& p : xf.members) degrees = degrees && p.degree() == n;
  cert.add("degrees", degrees, degrees ? "" : "members must be partitions of n");
  if (!degrees) return cert;

  const std::set<Partition> distinct(xf.members.begin(), xf.members.end());
  cert.add("distinct", static_cast<long long>(distinct.size()) == t,
           std::to_string(distinct.size()) + " distinct of " + std::to_string(t));

  std::vector<long long> count(static_cast<std::size_t>(h) + 1, 0);
  for (const auto& p : xf.members) {
    cert.masks.push_back(partial_sums(p));
    for (int i = 1; i <= h; ++i) count[static_cast<std::size_t>(i)] += cert.masks.back().test(i);
  }

  std::vector<int> common;
  for (int i = 1; i <= h; ++i) {
    if (count[static_cast<std::size_t>(i)] == t) common.push_back(i);
  }
  cert.add("property1", common.empty(), common.empty() ? "no common partial sum in [1, n/2]"
                                                       : "common partial sums " + join(common));

  cert.witnesses = xf.witnesses;
  std::string bad;
  bool witnesses_ok = static_cast<long long>(xf.witnesses.size()) == t;
  if (!witnesses_ok) bad = "witness table has " + std::to_string(xf.witnesses.size()) + " entries";
  for (long long k = 0; witnesses_ok && k < t; ++k) {
    const int w = xf.witnesses[static_cast<std::size_t>(k)];
    const bool ok = w >= 1 && w <= h && !cert.masks[static_cast<std::size_t>(k)].test(w) &&
                    count[static_cast<std::size_t>(w)] == t - 1;
    if (!ok) {
      witnesses_ok = false;
      bad = "witness " + std::to_string(w) + " fails for " + xf.members[static_cast<std::size_t>(k)].to_string();
    }
  }
  cert.add("property2", witnesses_ok, witnesses_ok ? "every member has a private witness" : bad);

  const std::set<int> distinct_witnesses(xf.witnesses.begin(), xf.witnesses.end());
  cert.add("injective", distinct_witnesses.size() == xf.witnesses.size(), "witnesses pairwise distinct");

  const bool big = exceeds_half_minus_log2(t, n);
  cert.add("property3", big, std::to_string(t) + (big ? " > " : " <= ") + "n/2 - log2 n");

  if (n >= 13 && xf.repair_case != RepairCase::small_n) {
    const Partition x1 = modified_x1(n);
    const auto it = std::find(xf.members.begin(), xf.members.end(), x1);
    bool ok = it != xf.members.end();
    std::string detail = ok ? "x_1 = " + x1.to_string() : "x_1 missing";
    if (ok) {
      const auto gaps = cert.masks[static_cast<std::size_t>(it - xf.members.begin())].missing(2, h);
      ok = gaps.empty();
      if (!ok) detail += " misses " + join(gaps);
    }
    cert.add("x1_partial_sums", ok, detail);
  }
  return cert;
}

namespace {

std::string descriptor_list(const std::vector<std::pair<int, int>>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out.empty() ? "none" : out;
}

}  // namespace

FamilyCertificate verify_mig_lower_bound(const XFamily& xf) {
  const int n = xf.n;
  if (n < 11) throw std::invalid_argument("verify_mig_lower_bound: needs n >= 11");
  FamilyCertificate cert = verify_x_family(xf);
  if (!cert.find("degrees")->passed) return cert;

  if (n <= 12) {
    const MigCertificate mig = is_mig_set(n, xf.members);
    std::string detail = mig.generates ? "invariably generates" : "contained in " + mig.overgroup->label;
    for (std::size_t k = 0; k < mig.subgroups.size(); ++k) {
      detail += "; " + xf.members[k].to_string() + " -> " + (mig.subgroups[k] ? mig.subgroups[k]->label : "none");
    }
    cert.add("oracle", mig.is_mig, detail);
    return cert;
  }

  const Partition x1 = modified_x1(n);
  const bool has_x1 = std::find(xf.members.begin(), xf.members.end(), x1) != xf.members.end();
  cert.add("x1_present", has_x1, x1.to_string());
  const bool odd = parity(x1) == Parity::odd;
  cert.add("parity", has_x1 && odd, "x_1 is " + to_string(parity(x1)));
  const auto jordan = jordan_witness(x1);
  cert.add("jordan", has_x1 && jordan.has_value(),
           jordan ? "power of x_1 is a " + std::to_string(*jordan) + "-cycle" : "no prime cycle power");

  std::optional<Partition> z;
  for (const auto& p : xf.members) {
    const int ell = p.largest();
    if (p.multiplicity(1) == n - ell && 2 * ell > n && 2 * ell < n + 6) z = p;
  }
  cert.add("z_present", z.has_value(), z ? z->to_string() : "no member (l, 1^{n-l}) with n/2 < l < n/2 + 3");
  if (!z) {
    cert.add("blocks", false, "no z");
    return cert;
  }

  const int ell = z->largest();
  std::vector<std::pair<int, int>> shared;
  bool ok = true;
  std::string detail;
  for (u64 k : divisors(static_cast<u64>(n))) {
    const int a = static_cast<int>(k);
    if (a < 2 || a > n / 2) continue;
    if (!wreath_realizable(*z, a, n / a)) continue;
    shared.emplace_back(a, n / a);
    if (ell % a != 0 || a > 5) {
      ok = false;
      detail = "z preserves blocks of size " + std::to_string(a);
    }
  }
  if (n == 15) {
    const Partition p415({7, 5, 1, 1, 1});
    const bool present = std::find(xf.members.begin(), xf.members.end(), p415) != xf.members.end();
    std::vector<std::pair<int, int>> preserved;
    for (auto [a, b] : {std::pair{3, 5}, std::pair{5, 3}}) {
      if (wreath_realizable(p415, a, b)) preserved.emplace_back(a, b);
    }
    ok = ok && present && preserved.empty();
    if (detail.empty()) {
      detail = present ? "p_{4,15} = " + p415.to_string() + " preserves " + descriptor_list(preserved)
                       : "p_{4,15} missing";
    }
  } else {
    std::vector<std::pair<int, int>> preserved;
    for (const auto& [a, b] : shared) {
      if (wreath_realizable(x1, a, b)) preserved.emplace_back(a, b);
    }
    ok = ok && preserved.empty();
    if (detail.empty()) {
      detail = "z allows " + descriptor_list(shared) + "; x_1 preserves " + descriptor_list(preserved);
    }
  }
  cert.add("blocks", ok, detail);
  return cert;
}

}  // namespace migs
