#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylbool/root_set.hpp"
#include "weylbool/root_system.hpp"

namespace weylbool {

/// Sequence of 1-based simple reflection labels.
using Word = std::vector<int>;

std::string format_word(std::span<const int> word);
// Space-separated indices ("2 1 3 2"); the empty string is the empty word.
// Throws std::invalid_argument naming the offending token.
Word parse_word(std::string_view text);

/// Element of W(Phi), stored as its inversion set I(w) = {beta > 0 : w beta < 0}.
///
/// Simple reflections act on the right: I(w s) = s I(w) u {alpha} when the
/// length grows.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr system);

  // Evaluates the word left to right; the flag is true iff every step grew the length.
  static std::pair<WeylElement, bool> from_word(RootSystemPtr system, std::span<const int> word);

  // Throws std::invalid_argument (naming a violating pair) when I is not biconvex.
  static WeylElement from_inversions(RootSystemPtr system, const RootSet& inversions);
  static WeylElement from_inversions(RootSystemPtr system, std::span<const Root> inversions);

  const RootSystem& system() const { return *system_; }
  const RootSystemPtr& system_ptr() const { return system_; }
  const RootSet& inversions() const { return inversions_; }
  std::vector<Root> inversion_roots() const;
  int length() const { return inversions_.count(); }
  bool is_identity() const { return inversions_.empty(); }

  // alpha_letter is a right descent.
  bool has_descent(int letter) const { return inversions_.test(letter - 1); }
  std::vector<int> descents() const;

  // w * s_letter.
  WeylElement times_simple(int letter) const;

  // Reduced word built by repeatedly peeling the smallest right descent.
  Word canonical_word() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.system_.get() == b.system_.get() && a.inversions_ == b.inversions_;
  }

 private:
  friend struct ElementAccess;
  WeylElement(RootSystemPtr system, RootSet inv) : system_(std::move(system)), inversions_(inv) {}

  RootSystemPtr system_;
  RootSet inversions_;
};

// Library-internal construction from a set already known to be an inversion set.
struct ElementAccess {
  static WeylElement make(RootSystemPtr system, const RootSet& inv) {
    return WeylElement(std::move(system), inv);
  }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.inversions().hash(); }
};

// s_alpha applied to an inversion-set update (shared by from_word and times_simple).
RootSet apply_simple(const RootSystem& rs, const RootSet& inv, int simple_index);

bool is_biconvex(const RootSystem& rs, const RootSet& set);
// First pair (j, k) of root indices violating one of the two closure conditions.
std::optional<std::pair<int, int>> biconvex_violation(const RootSystem& rs, const RootSet& set);

WeylElement multiply(const WeylElement& u, const WeylElement& v);

// Strong Bruhat order decided along the canonical word of w.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

inline constexpr int kDefaultIntervalBound = 12;
inline constexpr std::uint64_t kDefaultGroupBound = 1'000'000;

// Elements of [id, w], obtained as products of subwords of a reduced word,
// ordered by length and then by inversion set. Throws if l(w) > bound.
std::vector<WeylElement> bruhat_interval_elements(const WeylElement& w,
                                                  int bound = kDefaultIntervalBound);

struct BruhatInterval {
  std::vector<WeylElement> elements;
  // leq[a][b] iff elements[a] <= elements[b].
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return elements.size(); }
  // Number of elements of each length 0..l(w).
  std::vector<int> rank_sizes() const;
};

BruhatInterval bruhat_interval(const WeylElement& w, int bound = kDefaultIntervalBound);

// Visits every element once, breadth-first by length. Throws when |W| would
// exceed the bound. Returns the number of elements.
std::uint64_t for_each_element(const RootSystemPtr& rs,
                               const std::function<void(const WeylElement&)>& visit,
                               std::uint64_t bound = kDefaultGroupBound);

std::vector<WeylElement> enumerate_group(const RootSystemPtr& rs,
                                         std::uint64_t bound = kDefaultGroupBound);

}  // namespace weylbool
