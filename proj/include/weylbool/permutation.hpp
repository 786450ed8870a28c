#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "weylbool/weyl_element.hpp"

namespace weylbool {

using BigInt = boost::multiprecision::cpp_int;

/// One-line notation, 1-based: w(i) = one_line[i-1].
class Permutation {
 public:
  Permutation() = default;
  // Throws unless the values are a bijection on 1..n.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  // "436512" (n <= 9) or "4,3,6,5,1,2". Throws naming the offending token.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }
  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;

  // Compact digits when n <= 9, commas otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

// Classical containment: some subsequence is order-isomorphic to p.
bool contains_pattern(const Permutation& w, const Permutation& p);

// Reduced word over adjacent transpositions ending in right descents, as an
// element of W(A_{n-1}); w s_j swaps positions j and j+1. Requires n >= 2.
Word reduced_word(const Permutation& w);
WeylElement to_weyl_element(const Permutation& w);
Permutation from_weyl_element(const WeylElement& w);

inline constexpr int kMaxMultiplicitySize = 9;

// g_i(w) for i = 1..n-1: the largest number of occurrences of s_i in a
// reduced word, by memoized descent recursion. Throws when n > 9.
std::vector<int> max_letter_multiplicity(const Permutation& w);
bool is_k_boolean(const Permutation& w, int k);

// Avoids 3421, 4312, 4321 and 456123.
bool is_2boolean_patterns(const Permutation& w);

struct ABCStats {
  int a = 0;
  int b = 0;
  int c = 0;
  bool defined = false;
};

ABCStats abc_stats(const Permutation& w);

inline constexpr int kMaxCountSize = 10;

// Full scan of S_n, partitioned by w(1) across threads. Throws when n > 10.
std::uint64_t count_2boolean(int n, int threads = 1);

// f(0..N) by the linear recurrence from the seeds 1, 1, 2, 6, 21.
std::vector<BigInt> gf_coefficients(int N);
// f(0..N) by formal power-series division of the rational generating function.
std::vector<BigInt> gf_series_division(int N);

struct RefinedCounts {
  int n = 0;
  // Left sides counted over S_n, with w(1) != 1 and the given a(w), b(w).
  std::uint64_t f0 = 0, f1 = 0, f00 = 0, f01 = 0, f11 = 0;
  // Right sides from f(k) = count_2boolean(k), k < n.
  std::int64_t rhs_f0 = 0, rhs_f1 = 0, rhs_f00 = 0, rhs_f01 = 0, rhs_f11 = 0;
  // Number of 2-boolean w with a(w) >= 2 and b(w) >= 2 (expected 0).
  std::uint64_t both_large = 0;

  bool holds() const {
    return static_cast<std::int64_t>(f0) == rhs_f0 && static_cast<std::int64_t>(f1) == rhs_f1 &&
           static_cast<std::int64_t>(f00) == rhs_f00 && static_cast<std::int64_t>(f01) == rhs_f01 &&
           static_cast<std::int64_t>(f11) == rhs_f11;
  }
};

// Throws when n > 10 or n < 2.
RefinedCounts refined_counts(int n, int threads = 1);

}  // namespace weylbool
