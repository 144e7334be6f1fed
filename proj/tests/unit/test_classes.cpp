#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "wreath/brute.hpp"
#include "wreath/classreps.hpp"

using namespace wreath;

namespace {

std::shared_ptr<const PermGroupOracle> s4() {
  static auto K = make_perm_oracle(PermGroup::symmetric(4));
  return K;
}

Ctx with_top(std::vector<const char*> gens) {
  std::vector<Perm> parsed;
  for (auto* g : gens) parsed.push_back(Perm::parse(g, 8));
  return WreathContext::make(s4(), PermGroup(8, std::move(parsed)));
}

Ctx w1() {
  static Ctx ctx = with_top({"(1,2)(3,4)", "(1,2,3,4)", "(5,6)", "(7,8)"});
  return ctx;
}
Ctx w2() {
  static Ctx ctx = with_top({"(1,2)(3,4)(5,6)", "(3,5)(4,6)(7,8)"});
  return ctx;
}
Ctx w3() {
  static Ctx ctx = with_top({"(1,2)(3,4)(5,6)", "(7,8)"});
  return ctx;
}

int orbit_count(const std::vector<int>& action) {
  std::vector<char> seen(action.size(), 0);
  int count = 0;
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = action[j]) seen[j] = 1;
  }
  return count;
}

// Orbit count of the centraliser acting on the labelling space, averaged
// over the whole centraliser (Cauchy-Frobenius counting).
std::uint64_t burnside_orbits(const LabellingSpace& space, const PermGroup& centraliser) {
  std::uint64_t fixed_sum = 0;
  for (const Perm& t : centraliser.elements()) {
    std::uint64_t fix = 1;
    int orbits = orbit_count(space.slot_action(t));
    for (int i = 0; i < orbits; ++i) fix *= space.class_count();
    fixed_sum += fix;
  }
  REQUIRE(fixed_sum % centraliser.size() == 0);
  return fixed_sum / centraliser.size();
}

}  // namespace

TEST_CASE("labelling spaces encode and decode consistently") {
  Perm h = Perm::parse("(1,2)(3,4)(5,6)", 8);
  LabellingSpace space(h, 5);
  CHECK(space.slots() == 5);
  CHECK(space.total() == 3'125);
  CHECK(labelling_count(h, 5) == 3'125);
  CHECK(labelling_count(Perm::identity(8), 5) == 390'625);
  CHECK(labelling_count(Perm::parse("(1,2,3,4,5,6,7,8)", 8), 5) == 5);
  CHECK(labelling_count(Perm::identity(3), 1) == 1);

  SUBCASE("round trips over the whole space") {
    for (std::uint64_t i = 0; i < space.total(); ++i) {
      auto l = space.decode(i);
      CHECK(space.encode(l) == i);
      // every fixed-point label is -1 or a nonidentity class
      for (int v : l.fixed_class) CHECK(((v == -1) || (v >= 1 && v < 5)));
      auto p = space.decomposition_of(l);
      CHECK(space.labelling_of(p) == l);
    }
  }
  SUBCASE("invalid labellings are rejected") {
    CHECK_THROWS_AS(space.decode(3'125), DomainError);
    DecompositionLabelling l = space.decode(0);
    l.fixed_class[0] = 0;
    CHECK_THROWS_AS(space.encode(l), DomainError);
    l.fixed_class[0] = 5;
    CHECK_THROWS_AS(space.encode(l), DomainError);
    l = space.decode(0);
    l.cycle_class.pop_back();
    CHECK_THROWS_AS(space.encode(l), DomainError);
  }
  SUBCASE("the cap is enforced") {
    CHECK_THROWS_AS(LabellingSpace(Perm::identity(8), 5, 1'000), CapExceeded);
    CHECK_THROWS_AS(class_count(w2(), 1'000), CapExceeded);
  }
}

TEST_CASE("slot actions commute with mapping decompositions") {
  std::mt19937_64 rng(31);
  PermGroup s6 = PermGroup::symmetric(6);
  auto K = make_perm_oracle(PermGroup::symmetric(3));
  for (int trial = 0; trial < 60; ++trial) {
    Perm h = Perm::random(6, rng);
    LabellingSpace space(h, static_cast<int>(K->class_count()));
    PermGroup c = s6.centraliser(h);
    const auto& cs = c.elements();
    Perm t = cs[rng() % cs.size()];
    auto action = space.slot_action(t);

    auto l = space.decode(rng() % space.total());
    // permute the slot values by hand
    std::vector<int> vals(space.slots());
    for (std::size_t i = 0; i < l.cycle_class.size(); ++i) vals[i] = l.cycle_class[i];
    for (std::size_t i = 0; i < l.fixed_class.size(); ++i)
      vals[l.cycle_class.size() + i] = l.fixed_class[i];
    std::vector<int> img(space.slots());
    for (std::size_t i = 0; i < vals.size(); ++i) img[action[i]] = vals[i];
    DecompositionLabelling ml;
    ml.cycle_class.assign(img.begin(), img.begin() + l.cycle_class.size());
    ml.fixed_class.assign(img.begin() + l.cycle_class.size(), img.end());

    CHECK(space.decomposition_of(l).mapped(t) == space.decomposition_of(ml));
  }
  LabellingSpace space(Perm::parse("(1,2)", 6), 3);
  CHECK_THROWS_AS(space.slot_action(Perm::parse("(1,3)", 6)), DomainError);
}

TEST_CASE("orbit sweeps agree with averaged fixed-point counting") {
  SUBCASE("over the centraliser of random tops in Sym(5)") {
    PermGroup s5 = PermGroup::symmetric(5);
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
      Perm h = Perm::random(5, rng);
      int r = 1 + static_cast<int>(rng() % 4);
      LabellingSpace space(h, r);
      PermGroup c = s5.centraliser(h);
      CHECK(sweep_labelling_orbits(space, c.generators(), nullptr) ==
            burnside_orbits(space, c));
    }
  }
  SUBCASE("trivial generator set separates every labelling") {
    LabellingSpace space(Perm::parse("(1,2)(3,4)", 5), 3);
    CHECK(sweep_labelling_orbits(space, {}, nullptr) == space.total());
  }
  SUBCASE("early stop returns the number visited") {
    LabellingSpace space(Perm::identity(4), 3);
    int visits = 0;
    auto n = sweep_labelling_orbits(space, {}, [&](const DecompositionLabelling&) {
      return ++visits < 7;
    });
    CHECK(visits == 7);
    CHECK(n == 7);
  }
}

TEST_CASE("top class representatives") {
  CHECK(top_class_representatives(w1()).size() == 20);
  CHECK(top_class_representatives(w2()).size() == 4);
  CHECK(top_class_representatives(w3()).size() == 4);

  SUBCASE("full symmetric tops list one representative per cycle type") {
    auto ctx = WreathContext::make_full_symmetric(s4(), 8);
    auto reps = top_class_representatives(ctx);
    CHECK(reps.size() == 22);  // partitions of 8
    std::set<std::multiset<int>> types;
    for (const auto& h : reps) {
      std::multiset<int> type;
      for (const auto& c : h.cycles()) type.insert(static_cast<int>(c.size()));
      CHECK(types.insert(type).second);
    }
  }
  SUBCASE("representatives cover the top group without repetition") {
    auto ctx = w1();
    auto reps = top_class_representatives(ctx);
    std::set<int> covered;
    std::size_t total = 0;
    for (const auto& h : reps) {
      CHECK(covered.insert(ctx->top.index_of(h)).second);
      for (const auto& t : ctx->top.elements())
        covered.insert(ctx->top.index_of(h.conjugated_by(t)));
      total = covered.size();
    }
    CHECK(total == ctx->top.size());
  }
}

TEST_CASE("class counts of the worked ambient groups") {
  CHECK(class_count(w1()) == 92'000);
  CHECK(class_count(w2()) == 103'000);
  CHECK(class_count(w3()) == 160'000);

  SUBCASE("per-top breakdown in W2") {
    auto by_top = class_count_by_top(w2());
    REQUIRE(by_top.size() == 4);
    std::map<std::string, std::uint64_t> got;
    for (const auto& [h, n] : by_top) got[h.str()] = n;
    CHECK(got.at("()") == 99'375);
    CHECK(got.at("(3,5)(4,6)(7,8)") == 1'625);
    CHECK(got.at("(1,2)(3,4)(5,6)") == 1'625);
    CHECK(got.at("(1,2)(3,6)(4,5)(7,8)") == 375);
  }
  SUBCASE("per-top breakdown in W3") {
    auto by_top = class_count_by_top(w3());
    REQUIRE(by_top.size() == 4);
    std::map<std::string, std::uint64_t> got;
    for (const auto& [h, n] : by_top) got[h.str()] = n;
    CHECK(got.at("()") == 118'125);
    CHECK(got.at("(1,2)(3,4)(5,6)") == 1'875);
    CHECK(got.at("(7,8)") == 39'375);
    CHECK(got.at("(1,2)(3,4)(5,6)(7,8)") == 625);
  }
}

TEST_CASE("class count of Sym(4) wr Sym(8)") {
  auto ctx = WreathContext::make_full_symmetric(s4(), 8);
  CHECK(class_count(ctx) == 6'765);
}

TEST_CASE("class machinery matches brute force on small products") {
  auto run = [](const Ctx& ctx) {
    EnumeratedWreathGroup bw(ctx);
    auto brute = bf_conjugacy_classes(bw);
    CHECK(class_count(ctx) == brute.size());

    std::uint64_t by_top_total = 0;
    for (const auto& [h, n] : class_count_by_top(ctx)) by_top_total += n;
    CHECK(by_top_total == brute.size());

    // index -> brute class id
    std::map<std::uint64_t, std::size_t> class_of;
    for (std::size_t c = 0; c < brute.size(); ++c)
      for (auto idx : brute[c]) class_of[idx] = c;

    std::vector<WreathElement> reps;
    for_each_class_representative(ctx, [&](const WreathElement& w) {
      reps.push_back(w);
      return true;
    });
    CHECK(reps.size() == brute.size());
    std::set<std::size_t> covered;
    std::uint64_t size_sum = 0;
    for (const auto& w : reps) {
      CHECK(covered.insert(class_of.at(bw.index_of(w))).second);
      size_sum += class_size(w);
    }
    CHECK(covered.size() == brute.size());
    CHECK(size_sum == bw.size());  // class equation
  };
  SUBCASE("C2 wr Sym(3)") {
    auto K = make_perm_oracle(PermGroup(2, {Perm::parse("(1,2)", 2)}));
    run(WreathContext::make(K, PermGroup::symmetric(3)));
  }
  SUBCASE("C2 wr Sym(3), closed-form top") {
    auto K = make_perm_oracle(PermGroup(2, {Perm::parse("(1,2)", 2)}));
    run(WreathContext::make_full_symmetric(K, 3));
  }
  SUBCASE("Sym(3) wr C3") {
    auto K = make_perm_oracle(PermGroup::symmetric(3));
    run(WreathContext::make(K, PermGroup(3, {Perm::parse("(1,2,3)", 3)})));
  }
  SUBCASE("C2 wr Sym(4)") {
    auto K = make_perm_oracle(PermGroup(2, {Perm::parse("(1,2)", 2)}));
    run(WreathContext::make(K, PermGroup::symmetric(4)));
  }
  SUBCASE("Klein four wr Sym(3)") {
    auto K = make_perm_oracle(
        PermGroup(4, {Perm::parse("(1,2)(3,4)", 4), Perm::parse("(1,3)(2,4)", 4)}));
    run(WreathContext::make(K, PermGroup::symmetric(3)));
  }
}

TEST_CASE("representative streaming respects the stop signal") {
  auto K = make_perm_oracle(PermGroup::symmetric(3));
  auto ctx = WreathContext::make(K, PermGroup::symmetric(3));
  int visits = 0;
  for_each_class_representative(ctx, [&](const WreathElement&) {
    return ++visits < 5;
  });
  CHECK(visits == 5);
}

TEST_CASE("sparse representative of a labelled decomposition") {
  auto ctx = w2();
  const auto& K = *ctx->base;
  std::mt19937_64 rng(33);
  auto reps = top_class_representatives(ctx);
  for (int trial = 0; trial < 200; ++trial) {
    const Perm& h = reps[rng() % reps.size()];
    LabellingSpace space(h, static_cast<int>(K.class_count()));
    auto p = space.decomposition_of(space.decode(rng() % space.total()));
    WreathElement w = phi_h(ctx, h, p);
    CHECK(w.top() == h);
    auto dec = wreath_cycle_decomposition(w);
    CHECK(TerritoryDecomposition::of(dec) == p);
    for (const auto& z : dec.cycles) {
      // sparse: the only entry sits at the anchor and is the class minimum
      for (int g : z.territory) {
        if (g == z.anchor)
          CHECK(z.element.base_at(g) == K.class_representatives()[z.load.yade_class]);
        else
          CHECK(z.element.base_at(g) == 0);
      }
    }
  }
  SUBCASE("decompositions that do not fit the top are rejected") {
    Perm h = Perm::parse("(1,2)(3,4)(5,6)", 8);
    int k2 = K.class_of(K.parse("(1,2)"));
    auto bad = TerritoryDecomposition::from_rows({{Load{k2, 2}, {{1, 3}}}});
    CHECK_THROWS_AS(phi_h(ctx, h, bad), DomainError);
    auto bad_fixed = TerritoryDecomposition::from_rows({{Load{k2, 1}, {{1}}}});
    CHECK_THROWS_AS(phi_h(ctx, h, bad_fixed), DomainError);
    auto uncovered = TerritoryDecomposition::from_rows({{Load{k2, 2}, {{1, 2}}}});
    CHECK_THROWS_AS(phi_h(ctx, h, uncovered), DomainError);
  }
}

TEST_CASE("orbit representatives of a single top") {
  auto ctx = w2();
  Perm h = Perm::parse("(1,2)(3,4)(5,6)", 8);
  auto reps = orbit_representatives(ctx, h);
  CHECK(reps.size() == 1'625);
  LabellingSpace space(h, static_cast<int>(ctx->base->class_count()));
  std::set<std::uint64_t> codes;
  for (const auto& p : reps) CHECK(codes.insert(space.encode(space.labelling_of(p))).second);
}
