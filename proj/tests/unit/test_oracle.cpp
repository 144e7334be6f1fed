#include <doctest.h>

#include <numeric>
#include <set>

#include "wreath/group_oracle.hpp"

using namespace wreath;

TEST_CASE("oracle arithmetic mirrors the underlying permutations") {
  auto oracle = make_perm_oracle(PermGroup::symmetric(4));
  const auto n = static_cast<GroupOracle::Elem>(oracle->size());
  REQUIRE(n == 24);
  CHECK(oracle->identity() == 0);
  CHECK(oracle->perm_of(0).is_identity());

  for (GroupOracle::Elem a = 0; a < n; ++a) {
    CHECK(oracle->product(a, oracle->inverse(a)) == 0);
    CHECK(oracle->element_order(a) == oracle->perm_of(a).order());
    for (GroupOracle::Elem b = 0; b < n; ++b)
      CHECK(oracle->perm_of(oracle->product(a, b)) == oracle->perm_of(a) * oracle->perm_of(b));
  }
}

TEST_CASE("classes partition the group and sizes add up") {
  auto oracle = make_perm_oracle(PermGroup::symmetric(4));
  // Sym(4): identity, 6 transpositions, 8 three-cycles, 6 four-cycles, 3 double
  // transpositions
  CHECK(oracle->class_count() == 5);
  std::uint64_t total = 0;
  std::multiset<std::uint64_t> sizes;
  for (int c = 0; c < static_cast<int>(oracle->class_count()); ++c) {
    total += oracle->class_size(c);
    sizes.insert(oracle->class_size(c));
  }
  CHECK(total == oracle->size());
  CHECK(sizes == std::multiset<std::uint64_t>{1, 3, 6, 6, 8});

  // representatives are the class minima, class 0 is the identity's
  CHECK(oracle->class_representatives()[0] == 0);
  for (int c = 0; c < static_cast<int>(oracle->class_count()); ++c) {
    auto rep = oracle->class_representatives()[c];
    CHECK(oracle->class_of(rep) == c);
    for (GroupOracle::Elem a = 0; a < rep; ++a) CHECK(oracle->class_of(a) != c);
  }
}

TEST_CASE("class order is the enumeration order of Sym(4) minima") {
  // this fixed order is relied upon by the decomposition matrix rendering
  auto oracle = make_perm_oracle(
      PermGroup(4, {Perm::parse("(1,2)", 4), Perm::parse("(1,2,3,4)", 4)}));
  REQUIRE(oracle->class_count() == 5);
  std::vector<std::string> reps;
  for (auto r : oracle->class_representatives()) reps.push_back(oracle->describe(r));
  CHECK(reps[0] == "()");
  CHECK(reps[1] == "(1,2)");        // transpositions
  CHECK(oracle->class_size(1) == 6);
  CHECK(reps[2] == "(1,2,3,4)");    // 4-cycles
  CHECK(oracle->class_size(2) == 6);
  CHECK(oracle->class_size(3) == 8);  // 3-cycles
  CHECK(oracle->class_size(4) == 3);  // double transpositions
}

TEST_CASE("conjugacy witnesses are verified members") {
  auto oracle = make_perm_oracle(PermGroup::symmetric(4));
  const auto n = static_cast<GroupOracle::Elem>(oracle->size());
  for (GroupOracle::Elem a = 0; a < n; ++a)
    for (GroupOracle::Elem b = 0; b < n; ++b) {
      auto w = oracle->conj_witness(a, b);
      if (oracle->class_of(a) == oracle->class_of(b)) {
        REQUIRE(w.has_value());
        CHECK(oracle->conjugate(a, *w) == b);
      } else {
        CHECK_FALSE(w.has_value());
      }
    }
}

TEST_CASE("centralisers satisfy orbit-stabiliser") {
  auto oracle = make_perm_oracle(PermGroup::symmetric(4));
  for (GroupOracle::Elem a = 0; a < static_cast<GroupOracle::Elem>(oracle->size()); ++a) {
    auto cent = oracle->centraliser_elements(a);
    CHECK(cent.size() == oracle->centraliser_order(a));
    CHECK(cent.size() * oracle->class_size(oracle->class_of(a)) == oracle->size());
    for (auto c : cent) CHECK(oracle->conjugate(a, c) == a);

    // generators regenerate the same subgroup
    std::vector<Perm> gen_perms;
    for (auto g : oracle->centraliser_generators(a)) gen_perms.push_back(oracle->perm_of(g));
    PermGroup regen(4, gen_perms);
    CHECK(regen.size() == cent.size());
  }
}

TEST_CASE("describe/parse round trip and membership errors") {
  auto oracle = make_perm_oracle(PermGroup::symmetric(3));
  for (GroupOracle::Elem a = 0; a < 6; ++a)
    CHECK(oracle->parse(oracle->describe(a)) == a);

  // Klein subgroup of Sym(4): (1,2,3) parses as a permutation but is outside
  auto klein = make_perm_oracle(
      PermGroup(4, {Perm::parse("(1,2)(3,4)", 4), Perm::parse("(1,3)(2,4)", 4)}));
  CHECK_THROWS_AS(klein->parse("(1,2,3)"), DomainError);
  CHECK_THROWS_AS(klein->parse("(1,2"), ParseError);
}

TEST_CASE("large-ish oracle skips the multiplication table") {
  // Sym(7) has 5040 elements: above the table threshold, same interface
  auto oracle = make_perm_oracle(PermGroup::symmetric(7));
  CHECK(oracle->size() == 5040);
  CHECK(oracle->class_count() == 15);  // partitions of 7
  auto a = oracle->parse("(1,2,3,4,5)");
  auto b = oracle->parse("(3,4,5,6,7)");
  auto w = oracle->conj_witness(a, b);
  REQUIRE(w.has_value());
  CHECK(oracle->conjugate(a, *w) == b);
  CHECK(oracle->centraliser_order(a) == 10);  // 5 * fix(2)! = 10
}
