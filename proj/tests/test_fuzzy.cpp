#include <gtest/gtest.h>

#include "lfr/fuzzy.hpp"
#include "support.hpp"

namespace lfr {
namespace {

using test::names;

TEST(Pointwise, NegOnDiamonds) {
  auto fix = standard_algebra("m2_fix");
  auto a = FuzzySet::from_names(fix, test::xy(), {{"x", "b"}, {"y", "a"}});
  EXPECT_EQ(names(neg(a)), (std::vector<std::string>{"b", "a"}));
  auto swap = standard_algebra("m2_swap");
  auto s = FuzzySet::from_names(swap, test::xy(), {{"x", "a"}, {"y", "b"}});
  EXPECT_EQ(names(pointwise(PointwiseOp::Neg, s)), (std::vector<std::string>{"b", "a"}));
}

TEST(Pointwise, MeetWithTopAndBinaryOps) {
  auto alg = standard_algebra("chain3");
  auto uni = test::xy();
  auto one = top_set(alg, uni);
  for (FuzzySet a : FuzzySetSpace(alg, uni)) {
    EXPECT_EQ(meet(a, one), a);
    auto arrow = pointwise(PointwiseOp::Arrow, a, a);
    auto heyting = pointwise(PointwiseOp::Heyting, a, a);
    EXPECT_EQ(heyting, one);
    EXPECT_EQ(arrow, join(neg(a), a));
  }
}

TEST(Pointwise, ArityAndContextErrors) {
  auto alg = standard_algebra("chain3");
  auto a = top_set(alg, test::xy());
  EXPECT_THROW(pointwise(PointwiseOp::Join, a), Error);
  EXPECT_THROW(pointwise(PointwiseOp::Neg, a, a), Error);
  auto other = top_set(standard_algebra("bool2"), test::xy());
  try {
    join(a, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedContext);
  }
  auto other_universe = top_set(alg, Universe::make({"p", "q"}));
  EXPECT_THROW(meet(a, other_universe), Error);
}

TEST(Constants, BottomTopAndU) {
  auto alg = standard_algebra("chain3");
  auto uni = test::xy();
  EXPECT_EQ(constant_set(alg, uni, alg->bottom()), bottom_set(alg, uni));
  EXPECT_EQ(constant_set(alg, uni, alg->top()), top_set(alg, uni));
  EXPECT_EQ(names(constant_set(alg, uni, alg->element("u"))), (std::vector<std::string>{"u", "u"}));
}

TEST(Singleton, Definition) {
  auto alg = standard_algebra("m2_fix");
  auto uni = test::xy();
  EXPECT_EQ(names(singleton(alg, uni, "x")), (std::vector<std::string>{"1", "0"}));
  EXPECT_EQ(names(neg(singleton(alg, uni, "x"))), (std::vector<std::string>{"0", "1"}));
  auto one_point = Universe::make({"x"});
  EXPECT_EQ(singleton(alg, one_point, "x"), top_set(alg, one_point));
  try {
    singleton(alg, uni, "z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPoint);
  }
}

TEST(Decomposition, HoldsEverywhere) {
  auto fix = standard_algebra("m2_fix");
  EXPECT_TRUE(decomposition_check(FuzzySet::from_names(fix, test::xy(), {{"x", "b"}, {"y", "a"}})));
  EXPECT_TRUE(decomposition_check(bottom_set(fix, test::xy())));
  std::size_t count = 0;
  for (FuzzySet a : FuzzySetSpace(standard_algebra("chain3"), test::xy())) {
    EXPECT_TRUE(decomposition_check(a));
    ++count;
  }
  EXPECT_EQ(count, 9u);
  for (const auto& c : test::small_contexts()) {
    for (FuzzySet a : FuzzySetSpace(standard_algebra(c.algebra), Universe::of_size(c.n))) {
      EXPECT_TRUE(decomposition_check(a));
    }
  }
}

TEST(Universe, Validation) {
  EXPECT_THROW(Universe::make({}), Error);
  EXPECT_THROW(Universe::make({"x", "x"}), Error);
  EXPECT_EQ(Universe::of_size(3)->points(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(Universe::of_size(4)->name(3), "p4");
}

TEST(Values, RejectForeignElementsAndPartialMaps) {
  auto alg = standard_algebra("bool2");
  EXPECT_THROW(FuzzySet(alg, test::xy(), {elem(0)}), Error);
  EXPECT_THROW(FuzzySet(alg, test::xy(), {elem(0), elem(7)}), Error);
  EXPECT_THROW(FuzzySet::from_names(alg, test::xy(), {{"x", "0"}}), Error);
  EXPECT_THROW(FuzzyRelation(alg, test::xy(), {elem(0), elem(1)}), Error);
}

TEST(Enumeration, LexicographicOrderAndIndex) {
  auto alg = standard_algebra("m2_fix");
  FuzzySetSpace space(alg, test::xy());
  ASSERT_EQ(space.size(), 16u);
  EXPECT_EQ(names(space.at(0)), (std::vector<std::string>{"0", "0"}));
  EXPECT_EQ(names(space.at(1)), (std::vector<std::string>{"0", "a"}));
  EXPECT_EQ(names(space.at(4)), (std::vector<std::string>{"a", "0"}));
  EXPECT_EQ(names(space.at(15)), (std::vector<std::string>{"1", "1"}));
  std::uint64_t i = 0;
  for (auto it = space.begin(); it != space.end(); ++it, ++i) {
    EXPECT_EQ(it.position(), i);
    EXPECT_EQ(space.index_of(*it), i);
  }
  RelationSpace rels(alg, test::xy(), 1'000'000);
  EXPECT_EQ(rels.size(), 256u);
  auto r = rels.at(90);  // [[a,a],[b,b]]
  EXPECT_EQ(r.at("x", "y"), alg->element("a"));
  EXPECT_EQ(r.at("y", "x"), alg->element("b"));
}

TEST(Enumeration, CapsAreErrors) {
  auto alg = standard_algebra("m2_fix");
  try {
    RelationSpace(alg, Universe::of_size(4), 1'000'000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EnumerationTooLarge);
  }
  EXPECT_THROW(FuzzySetSpace(standard_algebra("chain_n(10)"), Universe::of_size(7)), Error);
  EXPECT_THROW(FuzzySetSpace(alg, test::xy(), 15), Error);
}

// F_L(U) with the pointwise operations is itself a De Morgan Heyting
// algebra: rebuild it through build_lattice and attach_involution.
TEST(PointwiseAlgebra, SetsFormDmhAlgebra) {
  for (const auto& c : test::small_contexts()) {
    auto alg = standard_algebra(c.algebra);
    auto uni = Universe::of_size(c.n);
    FuzzySetSpace space(alg, uni);
    if (space.size() > 64) continue;
    std::vector<FuzzySet> sets(space.begin(), space.end());
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < sets.size(); ++i) ids.push_back(std::to_string(i));
    OrderPairs order;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (i != j && leq(sets[i], sets[j])) order.emplace_back(ids[i], ids[j]);
      }
    }
    FiniteLattice lat = build_lattice(ids, order);
    std::vector<Elem> inv;
    for (const auto& s : sets) inv.push_back(elem(space.index_of(neg(s))));
    DmhAlgebra pw = attach_involution(lat, inv);
    EXPECT_EQ(pw.bottom(), elem(space.index_of(bottom_set(alg, uni))));
    EXPECT_EQ(pw.top(), elem(space.index_of(top_set(alg, uni))));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        EXPECT_EQ(pw.join(elem(i), elem(j)), elem(space.index_of(join(sets[i], sets[j]))));
        EXPECT_EQ(pw.meet(elem(i), elem(j)), elem(space.index_of(meet(sets[i], sets[j]))));
        EXPECT_EQ(pw.implies(elem(i), elem(j)),
                  elem(space.index_of(pointwise(PointwiseOp::Heyting, sets[i], sets[j]))));
      }
    }
  }
}

}  // namespace
}  // namespace lfr
