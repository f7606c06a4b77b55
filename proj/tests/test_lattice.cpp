#include <gtest/gtest.h>

#include "lfr/lattice.hpp"

namespace lfr {
namespace {

const OrderPairs kDiamond{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an lfr::Error";
  return ErrorCode::InvalidInput;
}

TEST(BuildLattice, DiamondHasIncomparableAtoms) {
  auto lat = build_lattice({"0", "a", "b", "1"}, kDiamond);
  Elem a = lat.element("a"), b = lat.element("b");
  EXPECT_FALSE(lat.leq(a, b));
  EXPECT_FALSE(lat.leq(b, a));
  EXPECT_EQ(lat.name(lat.join(a, b)), "1");
  EXPECT_EQ(lat.name(lat.meet(a, b)), "0");
  EXPECT_EQ(lat.name(lat.bottom()), "0");
  EXPECT_EQ(lat.name(lat.top()), "1");
}

TEST(BuildLattice, SingleElement) {
  auto lat = build_lattice({"0"}, {});
  EXPECT_EQ(lat.bottom(), lat.top());
  EXPECT_EQ(lat.size(), 1u);
}

TEST(BuildLattice, ThreeChainClosesTransitively) {
  auto lat = build_lattice({"0", "u", "1"}, {{"0", "u"}, {"u", "1"}});
  EXPECT_TRUE(lat.leq(lat.element("0"), lat.element("1")));
  EXPECT_EQ(lat.name(lat.join(lat.element("0"), lat.element("u"))), "u");
}

TEST(BuildLattice, Errors) {
  EXPECT_EQ(code_of([] { build_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }), ErrorCode::NotAPoset);
  EXPECT_EQ(code_of([] { build_lattice({"a", "b"}, {}); }), ErrorCode::NoBounds);
  // two maximal elements above a pair of minimal ones: a and b have no lub
  EXPECT_EQ(code_of([] {
              build_lattice({"0", "a", "b", "c", "d", "1"},
                            {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
            }),
            ErrorCode::NotALattice);
  EXPECT_EQ(code_of([] { build_lattice({}, {}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { build_lattice({"0", "0"}, {}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { build_lattice({"0", "1"}, {{"0", "2"}}); }), ErrorCode::UnknownElement);
}

TEST(BuildLattice, EmptyJoinIsBottomAndEmptyMeetIsTop) {
  auto lat = build_lattice({"0", "a", "b", "1"}, kDiamond);
  std::vector<Elem> none;
  EXPECT_EQ(lat.join_all(none), lat.bottom());
  EXPECT_EQ(lat.meet_all(none), lat.top());
}

TEST(DeriveHeyting, DiamondAndChain) {
  auto m2 = standard_algebra("m2_fix");
  Elem a = m2->element("a"), b = m2->element("b");
  EXPECT_EQ(m2->implies(a, b), b);
  EXPECT_EQ(m2->implies(b, a), a);
  auto c3 = standard_algebra("chain3");
  Elem u = c3->element("u");
  EXPECT_EQ(c3->name(c3->implies(u, u)), "1");
  for (const auto& id : standard_algebra_ids()) {
    auto alg = standard_algebra(id);
    for (Elem x : alg->elements()) EXPECT_EQ(alg->implies(x, alg->top()), alg->top());
  }
}

TEST(DeriveHeyting, RejectsNonDistributive) {
  auto n5 = build_lattice({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  EXPECT_FALSE(is_distributive(n5));
  EXPECT_EQ(code_of([&] { derive_heyting(n5); }), ErrorCode::NotDistributive);
  auto m3 = build_lattice({"0", "a", "b", "c", "1"},
                          {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
  EXPECT_EQ(code_of([&] { derive_heyting(m3); }), ErrorCode::NotDistributive);
}

TEST(DeriveHeyting, ResiduumIsLargest) {
  // Replacing any implies(a,b) with a strictly smaller element breaks
  // residuation for c = implies(a,b) itself.
  for (const auto& id : standard_algebra_ids()) {
    auto alg = standard_algebra(id);
    for (Elem a : alg->elements()) {
      for (Elem b : alg->elements()) {
        Elem r = alg->implies(a, b);
        for (Elem smaller : alg->elements()) {
          if (smaller == r || !alg->leq(smaller, r)) continue;
          EXPECT_FALSE(alg->leq(r, smaller));
          EXPECT_TRUE(alg->leq(alg->meet(a, r), b));
        }
      }
    }
  }
}

TEST(AttachInvolution, CatalogDiamonds) {
  auto fix = standard_algebra("m2_fix");
  EXPECT_EQ(fix->name(fix->neg(fix->element("a"))), "a");
  auto swap = standard_algebra("m2_swap");
  EXPECT_EQ(swap->name(swap->neg(swap->element("a"))), "b");
  EXPECT_FALSE(*fix == *swap);
}

TEST(AttachInvolution, Errors) {
  auto lat = build_lattice({"0", "a", "b", "1"}, kDiamond);
  EXPECT_EQ(code_of([&] { attach_involution(lat, std::map<std::string, std::string>{{"0", "1"}, {"a", "a"}, {"b", "a"}, {"1", "0"}}); }),
            ErrorCode::NotInvolutive);
  // involutive but order-preserving on the chain
  auto chain = build_lattice({"0", "u", "1"}, {{"0", "u"}, {"u", "1"}});
  EXPECT_EQ(code_of([&] { attach_involution(chain, std::map<std::string, std::string>{{"0", "0"}, {"u", "u"}, {"1", "1"}}); }),
            ErrorCode::NotAntitone);
  EXPECT_EQ(code_of([&] { attach_involution(chain, std::map<std::string, std::string>{{"0", "1"}, {"1", "0"}}); }),
            ErrorCode::SchemaError);
}

TEST(DemorganArrow, ChainAndBottom) {
  auto c3 = standard_algebra("chain3");
  Elem u = c3->element("u"), z = c3->bottom();
  EXPECT_EQ(demorgan_arrow(*c3, u, u), u);
  EXPECT_EQ(demorgan_arrow(*c3, u, z), u);
  EXPECT_EQ(c3->implies(u, z), z);
  for (const auto& id : standard_algebra_ids()) {
    auto alg = standard_algebra(id);
    for (Elem b : alg->elements()) EXPECT_EQ(demorgan_arrow(*alg, alg->bottom(), b), alg->top());
  }
}

TEST(StandardAlgebra, Catalog) {
  auto c3 = standard_algebra("chain3");
  EXPECT_EQ(c3->names(), (std::vector<std::string>{"0", "u", "1"}));
  EXPECT_EQ(c3->name(c3->neg(c3->element("u"))), "u");
  EXPECT_EQ(standard_algebra("bool2")->size(), 2u);
  EXPECT_EQ(standard_algebra("chain_n(5)")->size(), 5u);
  EXPECT_EQ(standard_algebra("m2_fix"), standard_algebra("m2_fix"));
  EXPECT_EQ(code_of([] { standard_algebra("m3"); }), ErrorCode::UnknownCatalogId);
  EXPECT_EQ(code_of([] { standard_algebra("chain_n(0)"); }), ErrorCode::UnknownCatalogId);
  EXPECT_EQ(code_of([] { standard_algebra("chain_n(x)"); }), ErrorCode::UnknownCatalogId);
}

// Every algebra in the catalog (plus a few chains) satisfies the structural
// laws over all pairs and triples.
class AlgebraLaws : public ::testing::TestWithParam<std::string> {};

TEST_P(AlgebraLaws, Exhaustive) {
  auto alg = standard_algebra(GetParam());
  const auto& A = *alg;
  EXPECT_EQ(A.neg(A.bottom()), A.top());
  EXPECT_EQ(A.neg(A.top()), A.bottom());
  for (Elem a : A.elements()) {
    EXPECT_TRUE(A.leq(A.bottom(), a));
    EXPECT_TRUE(A.leq(a, A.top()));
    EXPECT_EQ(A.neg(A.neg(a)), a);
    EXPECT_EQ(A.join(a, a), a);
    EXPECT_EQ(A.meet(a, a), a);
    for (Elem b : A.elements()) {
      EXPECT_EQ(A.join(a, b), A.join(b, a));
      EXPECT_EQ(A.meet(a, b), A.meet(b, a));
      EXPECT_EQ(A.join(a, A.meet(a, b)), a);
      EXPECT_EQ(A.meet(a, A.join(a, b)), a);
      EXPECT_EQ(A.neg(A.meet(a, b)), A.join(A.neg(a), A.neg(b)));
      EXPECT_EQ(A.leq(a, b), A.leq(A.neg(b), A.neg(a)));
      if (A.leq(a, b) && A.leq(b, a)) {
        EXPECT_EQ(a, b);
      }
      for (Elem c : A.elements()) {
        EXPECT_EQ(A.leq(A.meet(a, c), b), A.leq(c, A.implies(a, b)));
        EXPECT_EQ(A.meet(a, A.join(b, c)), A.join(A.meet(a, b), A.meet(a, c)));
        EXPECT_EQ(A.join(a, A.join(b, c)), A.join(A.join(a, b), c));
        EXPECT_EQ(A.meet(a, A.meet(b, c)), A.meet(A.meet(a, b), c));
        if (A.leq(a, b) && A.leq(b, c)) {
          EXPECT_TRUE(A.leq(a, c));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, AlgebraLaws,
                         ::testing::Values("bool2", "chain3", "m2_fix", "m2_swap", "chain_n(1)", "chain_n(6)"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s) {
                             if (c == '(' || c == ')') c = '_';
                           }
                           return s;
                         });

}  // namespace
}  // namespace lfr
