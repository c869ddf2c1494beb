#include <doctest.h>

#include <set>

#include "migs/group_oracle.hpp"
#include "migs/permutation.hpp"
#include "oracles.hpp"

using namespace migs;

namespace {

Partition P(std::string_view s, int n) { return Partition::parse(s, n); }

// Elements of <gens> by breadth-first closure.
std::set<oracle::Perm> closure(const std::vector<Permutation>& gens) {
  const int n = gens.front().degree();
  oracle::Perm id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  std::set<oracle::Perm> seen = {id};
  std::vector<oracle::Perm> frontier = {id};
  while (!frontier.empty()) {
    std::vector<oracle::Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = oracle::compose(x, g.images());
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation a = Permutation::parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(a.cycle_type().to_string() == "3,2");
  CHECK(a.parity() == Parity::odd);
  CHECK(a.to_cycle_string() == "(1 2 3)(4 5)");
  CHECK(a.then(a.inverse()).is_identity());
  const Permutation b = Permutation::parse_cycles("(1 2)", 5);
  // Right action: a first, then b.
  CHECK(a.then(b)(0) == 0);
  CHECK(Permutation::parse_cycles("()", 3).is_identity());
  CHECK(Permutation::parse_cycles("(1,2,3)", 3) == Permutation::parse_cycles("(1 2 3)", 3));
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 2 2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1 4)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("stabilizer chain orders") {
  PermGroup sym(6, {Permutation::parse_cycles("(1 2 3 4 5 6)", 6), Permutation::parse_cycles("(1 2)", 6)});
  CHECK(sym.order() == 720);
  PermGroup cyc(6, {Permutation::parse_cycles("(1 2 3 4 5 6)", 6)});
  CHECK(cyc.order() == 6);
  CHECK(cyc.is_transitive());
  CHECK_FALSE(cyc.is_primitive());
  // C_6 has block systems of sizes 2 and 3.
  std::set<std::size_t> sizes;
  for (const auto& sys : cyc.minimal_blocks()) sizes.insert(sys.front().size());
  CHECK(sizes == std::set<std::size_t>{2, 3});
  PermGroup big(12, {Permutation::parse_cycles("(1 2 3 4 5 6 7 8 9 10 11 12)", 12),
                     Permutation::parse_cycles("(1 2)", 12)});
  CHECK(big.order() == 479001600);
  CHECK(big.is_primitive());
  CHECK(big.contains(Permutation::parse_cycles("(3 7 11)(1 12)", 12)));
  PermGroup alt(5, {Permutation::parse_cycles("(1 2 3)", 5), Permutation::parse_cycles("(3 4 5)", 5)});
  CHECK(alt.order() == 60);
  CHECK_FALSE(alt.contains(Permutation::parse_cycles("(1 2)", 5)));
  CHECK_THROWS_AS(PermGroup(4, {Permutation::parse_cycles("(1 2)", 4)}).minimal_blocks(), std::invalid_argument);
}

TEST_CASE("generated records") {
  const MaximalSubgroupRecord w = make_imprimitive_record(2, 3);
  PermGroup g(6, w.generators);
  CHECK(g.order() == 48);
  CHECK(w.expected_order == 48);
  CHECK(g.is_transitive());
  CHECK_FALSE(g.is_primitive());
  const MaximalSubgroupRecord s = make_intransitive_record(7, 3);
  CHECK(PermGroup(7, s.generators).order() == 144);
  CHECK(make_alternating_record(7).alternating);
  CHECK(class_meets_subgroup(P("3", 7), make_alternating_record(7)));
  CHECK_FALSE(class_meets_subgroup(P("2", 7), make_alternating_record(7)));
}

TEST_CASE("bundled dataset") {
  const SubgroupDataset& data = builtin_dataset();
  CHECK(data.min_degree() == 5);
  CHECK(data.max_degree() == 12);
  CHECK_THROWS_AS(data.records(13), std::out_of_range);
  // Labels and class counts of the primitive records, frozen.
  const std::vector<std::tuple<int, std::string, std::uint64_t, int>> expected = {
      {5, "AGL_1(5)", 20, 5},       {6, "PGL_2(5)", 120, 7},     {7, "AGL_1(7)", 42, 7},
      {8, "PGL_2(7)", 336, 9},      {9, "AGL_2(3)", 432, 11},    {10, "PGammaL_2(9)", 1440, 13},
      {11, "AGL_1(11)", 110, 11},   {12, "PGL_2(11)", 1320, 13},
  };
  for (const auto& [n, label, order, classes] : expected) {
    CAPTURE(label);
    bool found = false;
    for (const auto& r : data.records(n)) {
      if (r.label != label) continue;
      found = true;
      CHECK(r.expected_order == order);
      CHECK(closure(r.generators).size() == order);
      REQUIRE(r.class_count.has_value());
      CHECK(*r.class_count == classes);
    }
    CHECK(found);
  }
  // Intransitive s < n/2, imprimitive by divisor, primitive, A_n.
  CHECK(data.records(6).size() == 2 + 2 + 1 + 1);
  CHECK(data.records(12).back().alternating);
}

TEST_CASE("dataset loader rejects bad records") {
  const std::string good = "version 1\nrecord\ndegree 5\nlabel AGL_1(5)\nkind affine\norder 20\n"
                           "generator (1 2 3 4 5)\ngenerator (2 3 5 4)\nend\n";
  CHECK_NOTHROW(SubgroupDataset::parse(good));
  std::string wrong_order = good;
  wrong_order.replace(wrong_order.find("order 20"), 8, "order 10");
  CHECK_THROWS_AS(SubgroupDataset::parse(wrong_order), DatasetError);
  const std::string imprimitive = "version 1\nrecord\ndegree 6\nlabel C6\nkind affine\norder 6\n"
                                  "generator (1 2 3 4 5 6)\nend\n";
  CHECK_THROWS_AS(SubgroupDataset::parse(imprimitive), DatasetError);
  CHECK_THROWS_AS(SubgroupDataset::parse("version 2\n"), DatasetError);
  CHECK_THROWS_AS(SubgroupDataset::parse("version 1\nrecord\ndegree 5\n"), DatasetError);
  CHECK_THROWS_AS(SubgroupDataset::parse("version 1\nrecord\ndegree 5\nlabel X\nkind weird\norder 1\nend\n"),
                  DatasetError);
}

TEST_CASE("invariable generation in S_6") {
  CHECK(is_mig_set(6, {P("5", 6), P("2,2,2", 6)}).generates == false);
  const auto pgl = invariably_generates(6, {P("5", 6), P("2,2,2", 6)});
  REQUIRE(pgl.witness.has_value());
  CHECK(pgl.witness->label == "PGL_2(5)");
  CHECK_FALSE(class_meets_subgroup(P("4", 6), make_imprimitive_record(3, 2)));
  CHECK(class_meets_subgroup(P("4,2", 6), make_imprimitive_record(3, 2)));
  const MigCertificate c = is_mig_set(6, {P("2", 6), P("3,3", 6), P("5", 6)});
  CHECK(c.generates);
  CHECK(c.is_mig);
  REQUIRE(c.subgroups[0].has_value());
  CHECK(c.subgroups[0]->label == "PGL_2(5)");
  // Both fix a point.
  const MigCertificate two = is_mig_set(6, {P("5", 6), P("2", 6)});
  CHECK_FALSE(two.generates);
  CHECK(two.overgroup->label == "intransitive(1)");
}

TEST_CASE("the list of types meeting four maximal records") {
  std::vector<Partition> star;
  for (const char* s : {"4,2", "4", "3,3", "3", "2,2,2", "2,2", "2"}) star.push_back(P(s, 6));
  CHECK(cycle_types_meeting_at_least(6, 4, true) == star);
  CHECK(cycle_types_meeting_at_least(6, 4, false).size() == 4);
  const MigScan scan = find_mig_set_of_size(6, 5);
  CHECK_FALSE(scan.found);
  CHECK(scan.sets_checked == 252);
  CHECK(find_mig_set_of_size(6, 4).sets_checked == 210);
  CHECK_FALSE(find_mig_set_of_size(6, 4).found);
  CHECK_FALSE(find_mig_set_of_size(6, 2).found);
  const MigScan three = find_mig_set_of_size(6, 3);
  REQUIRE(three.found);
  CHECK(three.example == std::vector<Partition>{P("6", 6), P("5", 6), P("4,2", 6)});
}

TEST_CASE("class_meets_subgroup agrees with element enumeration for n <= 8") {
  for (int n = 5; n <= 8; ++n) {
    for (const auto& r : builtin_dataset().records(n)) {
      if (r.alternating || r.kind == SubgroupKind::intransitive) continue;
      std::set<Partition> types;
      PermGroup(n, r.generators).for_each_element([&](const Permutation& g) { types.insert(g.cycle_type()); });
      for (const auto& p : enumerate_partitions(n)) {
        CAPTURE(r.label);
        CAPTURE(p.to_string());
        CHECK(class_meets_subgroup(p, r) == (types.count(p) != 0));
      }
    }
  }
}
