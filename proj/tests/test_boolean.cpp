#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "weylbool/boolean.hpp"
#include "weylbool/permutation.hpp"

using namespace weylbool;

namespace {

RootSystemPtr sys(const char* t) { return standard_system(CartanType::parse(t)); }

WeylElement word(const char* type, const char* w) {
  return WeylElement::from_word(sys(type), parse_word(w)).first;
}

Permutation perm(const char* s) { return Permutation::parse(s); }

template <typename F>
void for_each_permutation(int n, F f) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do f(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

TEST(BooleanWord, Examples) {
  EXPECT_TRUE(is_boolean_word(WeylElement::identity(sys("A3"))));
  EXPECT_FALSE(is_boolean_word(word("A3", "2 1 3 2")));
  EXPECT_TRUE(is_boolean_word(word("A2", "1 2")));
}

TEST(BooleanInterval, Examples) {
  EXPECT_TRUE(is_boolean_interval(WeylElement::identity(sys("A2"))));
  EXPECT_FALSE(is_boolean_interval(word("A2", "1 2 1")));
  EXPECT_TRUE(is_boolean_interval(word("A3", "1 2 3")));
  EXPECT_THROW(is_boolean_interval(WeylElement::from_inversions(sys("A5"), sys("A5")->all_positive())),
               std::invalid_argument);
}

TEST(BooleanBp, Examples) {
  EXPECT_FALSE(is_boolean_bp(word("B3", "2 1 3 2")));
  EXPECT_TRUE(is_boolean_bp(WeylElement::identity(sys("F4"))));
  BooleanAnalyzer an;
  for_each_element(sys("G2"), [&](const WeylElement& w) {
    if (w.length() >= 3) EXPECT_FALSE(an.is_boolean_bp(w));
  });
}

TEST(BooleanLinear, Examples) {
  EXPECT_FALSE(is_boolean_linear(word("B2", "1 2 1")));
  EXPECT_TRUE(is_boolean_linear(word("A2", "1 2")));
  EXPECT_FALSE(is_boolean_linear(word("B2", "2 1 2")));
}

TEST(BooleanLinear, ReducibleAmbientPerComponent) {
  auto rs = RootSystem::from_gram({{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 4, -2}, {0, 0, -2, 2}}, "A2xB2");
  BooleanAnalyzer an;
  EXPECT_TRUE(an.is_boolean_linear(WeylElement::from_word(rs, Word{1, 2, 3, 4}).first));
  EXPECT_FALSE(an.is_boolean_linear(WeylElement::from_word(rs, Word{1, 2, 1, 3}).first));
  EXPECT_FALSE(an.is_boolean_linear(WeylElement::from_word(rs, Word{3, 4, 3}).first));
  EXPECT_FALSE(an.is_boolean_bp(WeylElement::from_word(rs, Word{3, 4, 3}).first));
}

TEST(BooleanVerdict, AgreeOnSmallGroups) {
  BooleanAnalyzer an;
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    int boolean = 0;
    for_each_element(sys(name), [&](const WeylElement& w) {
      auto v = an.verdict(w);
      EXPECT_TRUE(v.consistent()) << name << " " << format_word(w.canonical_word());
      boolean += v.via_word;
    });
    if (std::string(name) == "A2" || std::string(name) == "B2" || std::string(name) == "G2") EXPECT_EQ(boolean, 5);
  }
}

TEST(PermutationText, ParseAndFormat) {
  EXPECT_EQ(perm("436512").one_line(), (std::vector<int>{4, 3, 6, 5, 1, 2}));
  EXPECT_EQ(perm("4,3,6,5,1,2"), perm("436512"));
  EXPECT_EQ(perm("4,3,6,5,1,2").to_string(), "436512");
  EXPECT_EQ(Permutation::identity(10).to_string(), "1,2,3,4,5,6,7,8,9,10");
  EXPECT_THROW(perm("4365x2"), std::invalid_argument);
  EXPECT_THROW(perm("1123"), std::invalid_argument);
  EXPECT_THROW(perm("1,,2"), std::invalid_argument);
  EXPECT_THROW(perm("0"), std::invalid_argument);
}

TEST(PermutationBridge, InversionsAgree) {
  for (int n = 2; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      auto e = to_weyl_element(w);
      EXPECT_EQ(e.length(), w.inversions());
      EXPECT_EQ(from_weyl_element(e), w);
      // alpha_i + ... + alpha_{j-1} is the pair of positions i < j.
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          std::vector<int> c(n - 1, 0);
          for (int t = i; t < j; ++t) c[t - 1] = 1;
          auto idx = e.system().index_of(Root(c));
          ASSERT_TRUE(idx.has_value());
          EXPECT_EQ(e.inversions().test(*idx), w(i) > w(j));
        }
      }
    });
  }
}

TEST(MaxLetterMultiplicity, Examples) {
  auto g0 = max_letter_multiplicity(Permutation::identity(5));
  EXPECT_TRUE(std::all_of(g0.begin(), g0.end(), [](int x) { return x == 0; }));
  auto g = max_letter_multiplicity(perm("436512"));
  EXPECT_EQ(g[2], 4);
  auto h = max_letter_multiplicity(perm("4357612"));
  EXPECT_TRUE(std::all_of(h.begin(), h.end(), [](int x) { return x <= 3; }));
  EXPECT_THROW(max_letter_multiplicity(Permutation::identity(10)), std::invalid_argument);
}

TEST(MaxLetterMultiplicity, CitedWordIsReduced) {
  auto rs = sys("A5");
  auto [w, reduced] = WeylElement::from_word(rs, parse_word("3 2 3 4 5 1 2 3 4 3"));
  EXPECT_TRUE(reduced);
  EXPECT_EQ(from_weyl_element(w), perm("436512"));
}

// Brute force over all reduced words for small n.
TEST(MaxLetterMultiplicity, MatchesReducedWordEnumeration) {
  for (int n = 2; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      std::vector<int> best(n - 1, 0);
      std::vector<int> count(n - 1, 0);
      auto rec = [&](auto&& self, std::vector<int>& v) -> void {
        bool any = false;
        for (int j = 0; j + 1 < n; ++j) {
          if (v[j] < v[j + 1]) continue;
          any = true;
          std::swap(v[j], v[j + 1]);
          ++count[j];
          self(self, v);
          --count[j];
          std::swap(v[j], v[j + 1]);
        }
        if (!any)
          for (int i = 0; i < n - 1; ++i) best[i] = std::max(best[i], count[i]);
      };
      std::vector<int> v = w.one_line();
      rec(rec, v);
      EXPECT_EQ(max_letter_multiplicity(w), best) << w.to_string();
    });
  }
}

TEST(KBoolean, Examples) {
  EXPECT_TRUE(is_k_boolean(Permutation::identity(4), 0));
  EXPECT_FALSE(is_k_boolean(perm("21"), 0));
  EXPECT_FALSE(is_k_boolean(perm("436512"), 3));
  EXPECT_TRUE(is_k_boolean(perm("4357612"), 3));
  EXPECT_TRUE(contains_pattern(perm("4357612"), perm("436512")));
}

TEST(TwoBooleanPatterns, Examples) {
  EXPECT_FALSE(is_2boolean_patterns(perm("4321")));
  EXPECT_FALSE(is_2boolean_patterns(perm("456123")));
  EXPECT_FALSE(is_2boolean_patterns(perm("436512")));
  EXPECT_FALSE(is_2boolean_patterns(perm("4357612")));
  EXPECT_TRUE(is_2boolean_patterns(perm("2143")));
}

TEST(TwoBooleanPatterns, MatchesMultiplicityUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      EXPECT_EQ(is_2boolean_patterns(w), is_k_boolean(w, 2)) << w.to_string();
    });
  }
}

TEST(TwoBooleanPatterns, LengthIncreasingProductsStayBad) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> v(8);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation w(v);
    if (is_2boolean_patterns(w)) continue;
    for (int j = 0; j + 1 < 8; ++j) {
      if (v[j] > v[j + 1]) continue;
      std::vector<int> u = v;
      std::swap(u[j], u[j + 1]);
      EXPECT_FALSE(is_2boolean_patterns(Permutation(u))) << w.to_string();
    }
  }
}

TEST(OneBoolean, MatchesBooleanAndTenner) {
  const auto p321 = perm("321"), p3412 = perm("3412");
  for (int n = 2; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      const bool b = is_boolean_word(to_weyl_element(w));
      EXPECT_EQ(is_k_boolean(w, 1), b);
      EXPECT_EQ(!contains_pattern(w, p321) && !contains_pattern(w, p3412), b);
    });
  }
}

TEST(ABCStats, Examples) {
  EXPECT_FALSE(abc_stats(perm("123")).defined);
  auto s = abc_stats(perm("21"));
  EXPECT_TRUE(s.defined);
  EXPECT_EQ(s.a + s.b + s.c, 0);
  auto t = abc_stats(perm("321"));
  EXPECT_EQ(t.c, 1);
  EXPECT_EQ(t.a, 0);
  EXPECT_EQ(t.b, 0);
}

TEST(ABCStats, AtMostOneLargeForTwoBoolean) {
  for (int n = 2; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      auto s = abc_stats(w);
      if (s.defined && is_2boolean_patterns(w)) EXPECT_TRUE(s.a <= 1 || s.b <= 1);
    });
  }
}

TEST(Count2Boolean, Examples) {
  EXPECT_EQ(count_2boolean(0), 1u);
  EXPECT_EQ(count_2boolean(1), 1u);
  EXPECT_EQ(count_2boolean(2), 2u);
  EXPECT_EQ(count_2boolean(3), 6u);
  EXPECT_EQ(count_2boolean(4), 21u);
  EXPECT_EQ(count_2boolean(5), 78u);
  EXPECT_EQ(count_2boolean(6, 3), 297u);
  EXPECT_THROW(count_2boolean(11), std::invalid_argument);
}

TEST(GeneratingFunction, Series) {
  auto f = gf_coefficients(4);
  EXPECT_EQ(f, (std::vector<BigInt>{1, 1, 2, 6, 21}));
  auto g = gf_coefficients(40);
  EXPECT_EQ(g[5], 78);
  EXPECT_EQ(g[6], 297);
  EXPECT_EQ(g, gf_series_division(40));
  EXPECT_GT(g[40], BigInt(std::numeric_limits<std::uint64_t>::max()) / 1000000);
}

TEST(RefinedCounts, Examples) {
  auto r4 = refined_counts(4);
  EXPECT_EQ(r4.f1, 4u);
  EXPECT_EQ(r4.rhs_f1, 4);
  EXPECT_EQ(r4.f11, 1u);
  EXPECT_EQ(r4.rhs_f11, 1);
  auto r5 = refined_counts(5);
  EXPECT_EQ(r5.f00, 10u);
  EXPECT_EQ(r5.rhs_f00, 10);
  for (int n = 4; n <= 6; ++n) EXPECT_TRUE(refined_counts(n).holds()) << n;
}
