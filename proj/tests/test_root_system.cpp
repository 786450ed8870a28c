#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "weylbool/root_system.hpp"

using namespace weylbool;

namespace {

RootSystemPtr sys(const char* t) { return RootSystem::build(CartanType::parse(t)); }

std::vector<CartanType> all_types_through_rank8() {
  std::vector<CartanType> out;
  for (int r = 1; r <= 8; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= 8; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= 8; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= 8; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= 8; ++r) out.push_back({Family::E, r});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

// Classical |Phi+| written out independently of the library.
int expected_positive(const CartanType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

}  // namespace

TEST(CartanTypeTest, RankConstraints) {
  EXPECT_THROW(CartanType::parse("B1"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("D3"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("E5"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("F3"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("G3"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("A0"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("Q2"), std::invalid_argument);
  EXPECT_EQ(CartanType::parse("E8").to_string(), "E8");
}

TEST(RootSystemBuild, A2PositiveRoots) {
  auto rs = sys("A2");
  ASSERT_EQ(rs->num_positive(), 3);
  EXPECT_EQ(rs->root(0), (Root{1, 0}));
  EXPECT_EQ(rs->root(1), (Root{0, 1}));
  EXPECT_EQ(rs->root(2), (Root{1, 1}));
}

TEST(RootSystemBuild, B2PositiveRoots) {
  auto rs = sys("B2");
  std::vector<Root> got(rs->positive_roots().begin(), rs->positive_roots().end());
  std::vector<Root> want{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  EXPECT_EQ(got, want);
}

TEST(RootSystemBuild, E8Has120PositiveRoots) { EXPECT_EQ(sys("E8")->num_positive(), 120); }

TEST(RootSystemBuild, CountsMatchClassicalFormulas) {
  for (const auto& t : all_types_through_rank8()) {
    auto rs = RootSystem::build(t);
    EXPECT_EQ(rs->num_positive(), expected_positive(t)) << t.to_string();
  }
}

TEST(RootSystemBuild, OrderingIsGradedByHeight) {
  for (const auto& t : all_types_through_rank8()) {
    auto rs = RootSystem::build(t);
    for (int i = 0; i < rs->rank(); ++i) {
      Root e(std::vector<int>(rs->rank(), 0));
      e[i] = 1;
      EXPECT_EQ(rs->root(i), e);
    }
    for (int j = 1; j < rs->num_positive(); ++j) {
      EXPECT_LE(rs->root(j - 1).height(), rs->root(j).height());
    }
  }
}

TEST(Reflect, Examples) {
  auto a2 = sys("A2");
  EXPECT_EQ(a2->reflect(0, Root{0, 1}), (Root{1, 1}));
  EXPECT_EQ(a2->reflect(0, Root{1, 0}), (Root{-1, 0}));
  auto b2 = sys("B2");
  EXPECT_EQ(b2->reflect(1, Root{1, 0}), (Root{1, 2}));
  EXPECT_THROW(a2->reflect(0, Root{2, 0}), std::invalid_argument);
}

TEST(Reflect, SelfIsNegative) {
  for (const auto& t : all_types_through_rank8()) {
    auto rs = RootSystem::build(t);
    for (int i = 0; i < rs->rank(); ++i) EXPECT_EQ(rs->reflect(i, rs->simple_root(i)), -rs->simple_root(i));
  }
}

TEST(Reflect, InvolutionAndPermutesPositives) {
  for (const auto& t : all_types_through_rank8()) {
    auto rs = RootSystem::build(t);
    for (int i = 0; i < rs->rank(); ++i) {
      for (const Root& b : rs->positive_roots()) {
        Root c = rs->reflect(i, b);
        EXPECT_EQ(rs->reflect(i, c), b);
        EXPECT_TRUE(rs->contains(c));
        if (!(b == rs->simple_root(i))) EXPECT_TRUE(c.is_positive()) << t.to_string();
      }
    }
  }
}

TEST(Support, Examples) {
  EXPECT_EQ((Root{1, 1}).support(), (std::vector<int>{1, 2}));
  EXPECT_EQ((Root{1, 2, 2}).support(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ((Root{0, 1, 0, 0}).support(), (std::vector<int>{2}));
  EXPECT_THROW((Root{-1, 0}).support(), std::invalid_argument);
  EXPECT_TRUE(sys("B3")->index_of(Root{1, 2, 2}).has_value());
}

TEST(RootPoset, Examples) {
  EXPECT_TRUE(root_poset_leq(Root{0, 1}, Root{1, 1}));
  EXPECT_FALSE(root_poset_leq(Root{1, 0}, Root{0, 1}));
  ASSERT_TRUE(sys("C3")->index_of(Root{1, 2, 1}).has_value());
  EXPECT_TRUE(root_poset_leq(Root{0, 1, 0}, Root{1, 2, 1}));
}

TEST(RootPoset, HighestRootIsUniqueMaximum) {
  for (const auto& t : all_types_through_rank8()) {
    auto rs = RootSystem::build(t);
    int maxima = 0;
    for (const Root& a : rs->positive_roots()) {
      bool is_max = true;
      for (const Root& b : rs->positive_roots()) {
        if (!(a == b) && root_poset_leq(a, b)) is_max = false;
      }
      maxima += is_max;
      EXPECT_TRUE(root_poset_leq(a, rs->highest_root()));
    }
    EXPECT_EQ(maxima, 1) << t.to_string();
  }
}

TEST(SumIfRoot, Examples) {
  auto a2 = sys("A2");
  EXPECT_EQ(a2->sum_index(0, 1), 2);
  EXPECT_EQ(a2->sum_index(0, 0), -1);
  auto b2 = sys("B2");
  EXPECT_EQ(b2->root(b2->sum_index(*b2->index_of(Root{1, 1}), 1)), (Root{1, 2}));
}

TEST(SumIfRoot, ClosureHasNoMixedSigns) {
  for (const auto& t : all_types_through_rank8()) {
    auto rs = RootSystem::build(t);
    const int m = rs->num_positive();
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        Root d = rs->root(j) - rs->root(k);
        if (rs->contains(d)) EXPECT_TRUE(d.is_positive() || d.is_negative());
        const int s = rs->sum_index(j, k);
        EXPECT_EQ(s >= 0, rs->contains(rs->root(j) + rs->root(k)));
      }
    }
  }
}

TEST(RootSystemBuild, FormIsPositiveDefiniteOnRoots) {
  for (const auto& t : all_types_through_rank8()) {
    auto rs = RootSystem::build(t);
    for (const Root& b : rs->positive_roots()) EXPECT_GT(rs->inner(b, b), 0);
  }
}

TEST(RootSystemBuild, G2FirstSimpleRootIsLong) {
  auto g2 = sys("G2");
  EXPECT_GT(g2->inner(g2->simple_root(0), g2->simple_root(0)), g2->inner(g2->simple_root(1), g2->simple_root(1)));
  EXPECT_EQ(g2->highest_root(), (Root{2, 3}));
}

TEST(RootSystemBuild, CrossChecksClassification) {
  for (const auto& t : all_types_through_rank8()) {
    auto rs = RootSystem::build(t);
    auto c = classify_irreducible(*rs);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, t);
  }
}

TEST(RootSystemBuild, RejectsInfiniteForm) {
  // Affine A1: closure never terminates.
  EXPECT_THROW(RootSystem::from_gram({{2, -2}, {-2, 2}}, "bad"), std::invalid_argument);
  EXPECT_THROW(RootSystem::from_gram({{2, -1}, {-2, 2}}, "bad"), std::invalid_argument);
}

TEST(RootText, RoundTrip) {
  Root r = Root::parse("1,2,2");
  EXPECT_EQ(r, (Root{1, 2, 2}));
  EXPECT_EQ(r.to_string(), "1,2,2");
  EXPECT_THROW(Root::parse("1,x"), std::invalid_argument);
}
