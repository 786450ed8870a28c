#include <gtest/gtest.h>

#include <set>

#include "weylbool/pattern.hpp"

using namespace weylbool;

namespace {

RootSystemPtr sys(const char* t) { return standard_system(CartanType::parse(t)); }

WeylElement word(const char* type, const char* w) {
  return WeylElement::from_word(sys(type), parse_word(w)).first;
}

std::set<std::string> literals(const PatternSet& s) {
  std::set<std::string> out;
  for (const auto& p : s) out.insert(p.literal());
  return out;
}

// Literal membership compared as pattern keys, so the expected list may use
// any reduced word.
void expect_same_patterns(const PatternSet& got, std::initializer_list<const char*> want) {
  PatternSet w;
  for (const char* lit : want) w.insert(Pattern::parse(lit));
  EXPECT_EQ(got.keys(), w.keys()) << "got " << ::testing::PrintToString(literals(got));
}

const char* kUniverse[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"};

}  // namespace

TEST(PatternLiteral, ParseAndPrint) {
  auto p = Pattern::parse("A3:2 1 3 2");
  EXPECT_EQ(p.system().label(), "A3");
  EXPECT_EQ(p.element().length(), 4);
  EXPECT_EQ(Pattern::parse(p.literal()).key(), p.key());
  EXPECT_THROW(Pattern::parse("A3 2 1"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("X3:1"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("A3:1 q"), std::invalid_argument);
}

TEST(PatternKey, DiagramAutomorphismIdentifies) {
  EXPECT_EQ(Pattern::parse("A2:1 2").key(), Pattern::parse("A2:2 1").key());
  EXPECT_NE(Pattern::parse("B2:1 2").key(), Pattern::parse("B2:2 1").key());
  EXPECT_EQ(Pattern::parse("D4:1 2").key(), Pattern::parse("D4:3 2").key());
}

TEST(LinearContains, TwoToOneEmbedding) {
  auto w = word("B2", "1 2 1");
  auto pi = Pattern::parse("A3:2 1 3 2");
  auto emb = linear_contains(w, pi);
  ASSERT_TRUE(emb.has_value());
  auto roots = emb->image_roots(w.system());
  EXPECT_EQ(roots, (std::vector<Root>{{0, 1}, {1, 0}, {0, 1}}));
  EXPECT_EQ(roots[0], roots[2]);
  EXPECT_FALSE(check_linear_embedding(w, pi, roots).has_value());
}

TEST(LinearContains, Absent) {
  auto pi1 = Pattern::parse("A2:1 2 1");
  for (const char* t : {"A1", "A2", "B2", "G2", "D4"}) {
    EXPECT_FALSE(linear_contains(WeylElement::identity(sys(t)), pi1).has_value());
  }
  EXPECT_FALSE(linear_contains(word("B2", "1 2 1"), pi1).has_value());
}

TEST(LinearContains, WitnessCheckerRejectsBadMaps) {
  auto w = word("B2", "1 2 1");
  auto pi = Pattern::parse("A3:2 1 3 2");
  EXPECT_TRUE(check_linear_embedding(w, pi, std::vector<Root>{{1, 0}, {0, 1}, {1, 0}}).has_value());
  EXPECT_TRUE(check_linear_embedding(w, pi, std::vector<Root>{{0, 1}, {1, 0}}).has_value());
}

TEST(BpContains, Examples) {
  auto pi2 = Pattern::parse("A3:2 1 3 2");
  auto self = bp_contains(pi2.element(), pi2);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->sub.positive_roots().count(), 6);
  EXPECT_FALSE(check_bp_witness(pi2.element(), pi2, *self).has_value());

  EXPECT_FALSE(bp_contains(word("B2", "1 2 1"), pi2).has_value());

  auto pi1 = Pattern::parse("A2:1 2 1");
  auto w = word("B2", "1 2 1 2");
  EXPECT_FALSE(bp_contains(w, pi1).has_value());
  auto lin = linear_contains(w, pi1);
  ASSERT_TRUE(lin.has_value());
  EXPECT_FALSE(check_linear_embedding(w, pi1, std::vector<Root>{{1, 0}, {0, 1}}).has_value());
}

TEST(BpContains, WitnessInsideLargerSystem) {
  auto pi1 = Pattern::parse("A2:1 2 1");
  auto w = word("A3", "2 1 3 2 1");
  auto wit = bp_contains(w, pi1);
  ASSERT_TRUE(wit.has_value());
  EXPECT_EQ(wit->sub.label(), "A2");
  EXPECT_FALSE(check_bp_witness(w, pi1, *wit).has_value());
}

TEST(BpContains, B2HasOnlyItselfAsRankTwoSubsystem) {
  SubsystemCatalog cat(sys("B2"), 2);
  EXPECT_EQ(cat.of_rank(2).size(), 1u);
  EmbeddingTable t(sys("B2"), sys("A2"));
  EXPECT_EQ(t.size(), 0u);
}

TEST(Properties, BpImpliesLinearAndWitnessesValid) {
  BpMatcher matcher;
  auto forbidden = forbidden_bp_patterns();
  for (const char* name : kUniverse) {
    for_each_element(sys(name), [&](const WeylElement& w) {
      for (const auto& pi : forbidden) {
        auto bp = matcher.find(w, pi);
        auto lin = linear_contains(w, pi);
        if (bp) {
          EXPECT_TRUE(lin.has_value()) << name << " " << format_word(w.canonical_word()) << " " << pi.literal();
          EXPECT_FALSE(check_bp_witness(w, pi, *bp).has_value());
        }
        if (lin) EXPECT_FALSE(check_linear_embedding(w, pi, lin->image_roots(w.system())).has_value());
      }
    });
  }
}

TEST(Properties, LinearEquivalentToBpInP) {
  BpMatcher matcher;
  for (const auto& pi : linear_boolean_patterns()) {
    auto P = compute_P(pi, pi.rank());
    for (const char* name : kUniverse) {
      for_each_element(sys(name), [&](const WeylElement& w) {
        bool via_p = false;
        for (const auto& sigma : P) {
          if (matcher.contains(w, sigma)) {
            via_p = true;
            break;
          }
        }
        EXPECT_EQ(linear_contains(w, pi).has_value(), via_p)
            << name << " " << format_word(w.canonical_word()) << " " << pi.literal();
      });
    }
  }
}

TEST(ComputeP, Pi1) {
  auto pi1 = Pattern::parse("A2:1 2 1");
  EXPECT_TRUE(compute_P(pi1, 1).empty());
  expect_same_patterns(compute_P(pi1, 2),
                       {"A2:1 2 1", "B2:2 1 2", "B2:1 2 1 2", "G2:2 1 2", "G2:1 2 1 2", "G2:2 1 2 1",
                        "G2:1 2 1 2 1", "G2:2 1 2 1 2", "G2:1 2 1 2 1 2"});
}

TEST(ComputeP, Pi2ContainsLemmaElements) {
  auto P = compute_P(Pattern::parse("A3:2 1 3 2"), 3);
  for (const char* lit : {"B2:1 2 1", "A3:2 1 3 2", "C3:2 1 3 2"}) {
    EXPECT_TRUE(P.contains(Pattern::parse(lit).key())) << lit;
  }
}

TEST(SetOperations, Trivial) {
  auto pi1 = Pattern::parse("A2:1 2 1");
  EXPECT_TRUE(reduce(PatternSet{}).empty());
  EXPECT_EQ(reduce(PatternSet{pi1}).size(), 1u);
  EXPECT_TRUE(quotient(PatternSet{pi1}, PatternSet{pi1}).empty());
  auto some = PatternSet{pi1, Pattern::parse("B2:1 2 1")};
  EXPECT_EQ(quotient(some, PatternSet{}).keys(), some.keys());
}

TEST(SetOperations, SecondAndThirdPatternSets) {
  BpMatcher m;
  auto pi1 = Pattern::parse("A2:1 2 1");
  auto pi2 = Pattern::parse("A3:2 1 3 2");
  auto pi3 = Pattern::parse("D4:2 1 3 4 2");
  auto P1 = compute_P(pi1, 2);
  auto Ppi2 = compute_P(pi2, 3);
  auto P2 = quotient(reduce(Ppi2, m), P1, m);
  expect_same_patterns(P2, {"B2:1 2 1", "A3:2 1 3 2", "C3:2 1 3 2"});
  auto P3 = quotient(reduce(compute_P(pi3, 4), m), P1.unite(Ppi2), m);
  expect_same_patterns(P3, {"G2:1 2 1", "B3:2 1 3 2", "D4:2 1 3 4 2"});
}

TEST(Table1, Counts) {
  auto t = forbidden_bp_patterns();
  int g2 = 0, b2 = 0;
  for (const auto& p : t) {
    g2 += p.system().label() == "G2";
    b2 += p.system().label() == "B2";
  }
  EXPECT_EQ(g2, 7);
  EXPECT_EQ(b2, 3);
  EXPECT_EQ(t.size(), 15u);
}
