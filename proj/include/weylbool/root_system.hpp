#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "weylbool/root_set.hpp"

namespace weylbool {

inline constexpr int kMaxRank = 8;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Throws std::invalid_argument when the rank is not allowed for the family.
  void validate() const;

  std::string to_string() const;
  // Parses "B3", "E8", ... and validates.
  static CartanType parse(std::string_view text);

  // |W| for this type (exact, fits in 64 bits for every supported rank).
  std::uint64_t weyl_order() const;
  // Classical count of positive roots.
  int positive_root_count() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// A vector of integer coefficients over the simple roots alpha_1..alpha_r.
class Root {
 public:
  Root() = default;
  explicit Root(std::span<const int> coeffs);
  Root(std::initializer_list<int> coeffs);

  int rank() const { return rank_; }
  int operator[](int i) const { return coeffs_[i]; }
  int& operator[](int i) { return coeffs_[i]; }
  std::span<const int> coeffs() const { return {coeffs_.data(), static_cast<std::size_t>(rank_)}; }

  int height() const;
  bool is_zero() const;
  bool is_positive() const;
  bool is_negative() const;

  // 1-based indices of simple roots with positive coefficient. Throws unless positive.
  std::vector<int> support() const;

  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator-() const;
  Root operator*(int k) const;

  // "1,2,2" for alpha_1 + 2 alpha_2 + 2 alpha_3.
  std::string to_string() const;
  static Root parse(std::string_view text);

  // Packs the coefficients into a single integer; injective for |c| < 64.
  std::uint64_t key() const;

  friend bool operator==(const Root& a, const Root& b) {
    return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::array<int, kMaxRank> coeffs_{};
  int rank_ = 0;
};

// Canonical root order: by height, then lexicographically with larger leading
// coefficients first, so that alpha_1 < alpha_2 < ... among simple roots.
bool canonical_less(const Root& a, const Root& b);

// true iff b - a is a nonnegative combination of simple roots (root poset order).
bool root_poset_leq(const Root& a, const Root& b);

using GramMatrix = std::vector<std::vector<int>>;

/// A finite crystallographic root system given in simple-root coordinates.
///
/// Positive roots are generated by closure of the simple roots under simple
/// reflections and stored in canonical order, so the first `rank()` entries
/// are alpha_1..alpha_r. Immutable after construction.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(CartanType type);

  // Any finite crystallographic system from the symmetric form on its simple
  // roots (possibly reducible). Throws if the closure does not terminate or
  // the reflection coefficients are not integral.
  static std::shared_ptr<const RootSystem> from_gram(GramMatrix gram, std::string label,
                                                     std::optional<CartanType> type = {});

  int rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const std::optional<CartanType>& cartan_type() const { return type_; }

  // Symmetrized form <alpha_i, alpha_j>, short roots normalized to length^2 2.
  int gram(int i, int j) const { return gram_[i][j]; }
  const GramMatrix& gram_matrix() const { return gram_; }
  // 2<alpha_i, alpha_j>/<alpha_i, alpha_i>: s_i(alpha_j) = alpha_j - cartan(i,j) alpha_i.
  int cartan(int i, int j) const { return cartan_[i][j]; }

  int num_positive() const { return static_cast<int>(positive_.size()); }
  std::span<const Root> positive_roots() const { return positive_; }
  const Root& root(int index) const { return positive_[index]; }
  const Root& simple_root(int i) const { return positive_[i]; }
  const Root& highest_root() const { return positive_.back(); }

  // Index of a positive root, or nullopt.
  std::optional<int> index_of(const Root& r) const;
  int index_of_key(std::uint64_t key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const Root& r) const;

  int inner(const Root& a, const Root& b) const;

  // s_{alpha_i}(beta) for 0-based simple index i. Throws if beta is not a root.
  Root reflect(int i, const Root& beta) const;
  // Index of s_i(root j) among positive roots, or -1 when root j is alpha_i.
  int reflect_index(int i, int j) const { return reflect_[i * num_positive() + j]; }
  // Index of root j + root k when that sum is a positive root, else -1.
  int sum_index(int j, int k) const { return sum_[j * num_positive() + k]; }

  RootSet all_positive() const;

  // Connected components of the Dynkin diagram as sorted lists of 0-based simple indices.
  std::vector<std::vector<int>> components() const;
  bool is_irreducible() const { return components().size() == 1; }

  // Simple-root permutations preserving the Cartan matrix (identity first).
  const std::vector<std::vector<int>>& diagram_automorphisms() const { return automorphisms_; }

 private:
  RootSystem() = default;

  int rank_ = 0;
  std::string label_;
  std::optional<CartanType> type_;
  GramMatrix gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> reflect_;
  std::vector<int> sum_;
  std::vector<std::vector<int>> automorphisms_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// The symmetrized Gram matrix used by build(): simple-root labels follow the
// standard Dynkin numbering (Bourbaki for E and F; G2 with alpha_1 long).
GramMatrix standard_gram(CartanType type);

// build(type) memoized, so that repeated requests share one instance (and
// elements built from them compare equal). Thread-safe.
RootSystemPtr standard_system(CartanType type);

// Identify an irreducible system's type by Cartan-matrix isomorphism.
std::optional<CartanType> classify_irreducible(const RootSystem& rs);

}  // namespace weylbool
