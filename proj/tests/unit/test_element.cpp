#include <doctest.h>

#include <numeric>
#include <random>

#include "wreath/brute.hpp"
#include "wreath/element.hpp"

using namespace wreath;

namespace {

Ctx s4_wr_sym8() {
  static Ctx ctx = WreathContext::make_full_symmetric(
      make_perm_oracle(PermGroup::symmetric(4)), 8);
  return ctx;
}

// the element used across the test suite, together with its four cycles
const char* kW = "( (1,2)(3,4), (3,4), (), (1,2), (1,2,3), (), (1,2), () ; (1,2)(3,4)(5,6) )";

Ctx small_ctx() {
  static Ctx ctx = WreathContext::make(
      make_perm_oracle(PermGroup::symmetric(3)),
      PermGroup(3, {Perm::parse("(1,2,3)", 3)}));
  return ctx;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  auto ctx = s4_wr_sym8();
  WreathElement w = parse_wreath_element(kW, ctx);
  CHECK(w.str() ==
        "((1,2)(3,4), (3,4), (), (1,2), (1,2,3), (), (1,2), () ; (1,2)(3,4)(5,6))");
  CHECK(parse_wreath_element(w.str(), ctx) == w);
  CHECK(w.base_at(1) == ctx->base->parse("(1,2)(3,4)"));
  CHECK(w.top() == Perm::parse("(1,2)(3,4)(5,6)", 8));

  CHECK_THROWS_AS(parse_wreath_element("( (1,2) ; () )", ctx), ParseError);  // wrong arity
  CHECK_THROWS_AS(parse_wreath_element("( (), (), (), (), (), (), (), () )", ctx), ParseError);
  CHECK_THROWS_AS(parse_wreath_element("(1,2)(3,4)", ctx), ParseError);
  auto klein = WreathContext::make(
      make_perm_oracle(PermGroup(4, {Perm::parse("(1,2)(3,4)", 4), Perm::parse("(1,3)(2,4)", 4)})),
      PermGroup::trivial(2));
  CHECK_THROWS_AS(parse_wreath_element("( (1,2), () ; () )", klein), DomainError);
}

TEST_CASE("multiplication matches the entrywise formula") {
  auto ctx = small_ctx();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<GroupOracle::Elem> fb(3), eb(3);
    for (auto& x : fb) x = pick(rng);
    for (auto& x : eb) x = pick(rng);
    Perm h = Perm::parse("(1,2,3)", 3).power(static_cast<long long>(rng() % 3));
    Perm g = Perm::parse("(1,2,3)", 3).power(static_cast<long long>(rng() % 3));
    WreathElement w(ctx, fb, h), v(ctx, eb, g);
    WreathElement prod = w * v;
    CHECK(prod.top() == h * g);
    for (int gamma = 1; gamma <= 3; ++gamma)
      CHECK(prod.base_at(gamma) ==
            ctx->base->product(w.base_at(gamma), v.base_at(h.apply(gamma))));

    CHECK((w * v).inverse() == v.inverse() * w.inverse());
    CHECK((w * w.inverse()).is_identity());
    CHECK(w.conjugated_by(v) == v.inverse() * w * v);
  }
}

TEST_CASE("territory and wreath cycle recognition") {
  auto ctx = s4_wr_sym8();
  WreathElement w = parse_wreath_element(kW, ctx);
  CHECK(territory(w) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK_FALSE(is_wreath_cycle(w));

  auto v = parse_wreath_element("( (), (), (), (), (), (), (1,2), () ; () )", ctx);
  CHECK(territory(v) == std::vector<int>{7});
  CHECK(is_wreath_cycle(v));

  auto u = parse_wreath_element("( (1,2)(3,4), (3,4), (), (), (), (), (), () ; (1,2) )", ctx);
  CHECK(is_wreath_cycle(u));

  // support strictly inside the territory: top (1,2) with an entry at 3
  auto x = parse_wreath_element("( (), (), (1,2), (), (), (), (), () ; (1,2) )", ctx);
  CHECK(territory(x) == std::vector<int>{1, 2, 3});
  CHECK_FALSE(is_wreath_cycle(x));

  CHECK_FALSE(is_wreath_cycle(WreathElement::identity(ctx)));
}

TEST_CASE("decomposition of the running element") {
  auto ctx = s4_wr_sym8();
  WreathElement w = parse_wreath_element(kW, ctx);
  auto dec = wreath_cycle_decomposition(w);
  REQUIRE(dec.cycles.size() == 4);

  CHECK(dec.cycles[0].territory == std::vector<int>{1, 2});
  CHECK(dec.cycles[0].element ==
        parse_wreath_element("( (1,2)(3,4), (3,4), (), (), (), (), (), () ; (1,2) )", ctx));
  CHECK(dec.cycles[1].territory == std::vector<int>{3, 4});
  CHECK(dec.cycles[1].element ==
        parse_wreath_element("( (), (), (), (1,2), (), (), (), () ; (3,4) )", ctx));
  CHECK(dec.cycles[2].territory == std::vector<int>{5, 6});
  CHECK(dec.cycles[2].element ==
        parse_wreath_element("( (), (), (), (), (1,2,3), (), (), () ; (5,6) )", ctx));
  CHECK(dec.cycles[3].territory == std::vector<int>{7});
  CHECK(dec.cycles[3].element ==
        parse_wreath_element("( (), (), (), (), (), (), (1,2), () ; () )", ctx));

  const auto& K = *ctx->base;
  CHECK(K.describe(dec.cycles[0].yade_at_anchor) == "(1,2)");
  CHECK(K.describe(dec.cycles[1].yade_at_anchor) == "(1,2)");
  CHECK(K.describe(dec.cycles[2].yade_at_anchor) == "(1,2,3)");
  CHECK(K.describe(dec.cycles[3].yade_at_anchor) == "(1,2)");

  // every cycle is a wreath cycle, they are disjoint, and multiply back to w
  WreathElement prod = WreathElement::identity(ctx);
  for (const auto& z : dec.cycles) {
    CHECK(is_wreath_cycle(z.element));
    prod = prod * z.element;
  }
  CHECK(prod == w);

  // loads: (k2,2) twice, (k2,1) once, (class of (1,2,3), 2) once
  int k2 = K.class_of(K.parse("(1,2)"));
  int k4 = K.class_of(K.parse("(1,2,3)"));
  REQUIRE(dec.strata.size() == 3);
  CHECK(dec.strata[0].load == Load{k2, 1});
  CHECK(dec.strata[0].members == std::vector<int>{3});
  CHECK(dec.strata[1].load == Load{k2, 2});
  CHECK(dec.strata[1].members == std::vector<int>{0, 1});
  CHECK(dec.strata[2].load == Load{k4, 2});
  CHECK(dec.strata[2].members == std::vector<int>{2});
}

TEST_CASE("yade values from the worked example") {
  auto ctx = s4_wr_sym8();
  auto u = parse_wreath_element("( (1,2)(3,4), (3,4), (), (), (), (), (), () ; (1,2) )", ctx);
  const auto& K = *ctx->base;
  CHECK(K.describe(yade(u, 1)) == "(1,2)");
  // from the other territory point the yade is a conjugate: (3,4)*(1,2)(3,4)
  CHECK(K.describe(yade(u, 2)) == "(1,2)");
  CHECK(K.class_of(yade(u, 1)) == K.class_of(yade(u, 2)));

  // the conjugator between the two yade positions does its job
  auto y = yade_conjugator(u, 1, 2);
  CHECK(K.conjugate(yade(u, 1), y) == yade(u, 2));
  CHECK(yade_conjugator(u, 1, 1) == K.identity());

  auto v = parse_wreath_element("( (), (), (), (), (), (), (1,2), () ; () )", ctx);
  CHECK(K.describe(yade(v, 7)) == "(1,2)");
  CHECK_THROWS_AS(yade_conjugator(u, 1, 7), DomainError);
}

TEST_CASE("order of the running element is 12") {
  auto ctx = s4_wr_sym8();
  WreathElement w = parse_wreath_element(kW, ctx);
  CHECK(element_order(w) == 12);
  CHECK(w.power(12).is_identity());
  CHECK_FALSE(w.power(6).is_identity());
  CHECK_FALSE(w.power(4).is_identity());
  CHECK(bf_order(w) == 12);
}

TEST_CASE("element order formula agrees with iterated multiplication") {
  auto ctx = small_ctx();
  EnumeratedWreathGroup full(ctx);
  REQUIRE(full.size() == 6 * 6 * 6 * 3);
  for (std::uint64_t i = 0; i < full.size(); ++i) {
    WreathElement w = full.element(i);
    CHECK(element_order(w) == bf_order(w));
  }
}

TEST_CASE("disjoint wreath cycles commute") {
  auto ctx = s4_wr_sym8();
  WreathElement w = parse_wreath_element(kW, ctx);
  auto dec = wreath_cycle_decomposition(w);
  for (const auto& a : dec.cycles)
    for (const auto& b : dec.cycles)
      CHECK(a.element * b.element == b.element * a.element);
}

TEST_CASE("restrict_to demands unions of top cycles") {
  auto ctx = s4_wr_sym8();
  WreathElement w = parse_wreath_element(kW, ctx);
  auto r = restrict_to(w, {1, 2});
  CHECK(r.top() == Perm::parse("(1,2)", 8));
  CHECK(r.base_at(1) == w.base_at(1));
  CHECK(r.base_at(3) == 0);
  CHECK_THROWS_AS(restrict_to(w, {1}), DomainError);
  CHECK_THROWS_AS(restrict_to(w, {0, 1}), DomainError);
}

TEST_CASE("sparse decomposition pins yades at anchors") {
  auto ctx = s4_wr_sym8();
  WreathElement w = parse_wreath_element(kW, ctx);
  auto sd = sparse_decomposition(w);
  CHECK(sd.conjugator.top().is_identity());
  CHECK(w.conjugated_by(sd.conjugator) == sd.sparse);
  CHECK(sd.sparse.top() == w.top());

  const auto& K = *ctx->base;
  CHECK(K.describe(sd.sparse.base_at(1)) == "(1,2)");
  CHECK(sd.sparse.base_at(2) == 0);
  CHECK(K.describe(sd.sparse.base_at(3)) == "(1,2)");
  CHECK(sd.sparse.base_at(4) == 0);
  CHECK(K.describe(sd.sparse.base_at(5)) == "(1,2,3)");
  CHECK(sd.sparse.base_at(6) == 0);
  CHECK(K.describe(sd.sparse.base_at(7)) == "(1,2)");
  CHECK(sd.sparse.base_at(8) == 0);

  // cycles of the sparse element carry the same loads
  CHECK(sd.cycles.load_multiset() == wreath_cycle_decomposition(w).load_multiset());
}

TEST_CASE("imprimitive embedding is a faithful homomorphism") {
  auto ctx = small_ctx();
  EnumeratedWreathGroup full(ctx);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    WreathElement a = full.element(rng() % full.size());
    WreathElement b = full.element(rng() % full.size());
    CHECK(embed_imprimitive(a * b) == embed_imprimitive(a) * embed_imprimitive(b));
    CHECK(embed_imprimitive(a).order() == element_order(a));
    if (!(a == b)) CHECK(embed_imprimitive(a) != embed_imprimitive(b));
  }
}
