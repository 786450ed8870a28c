#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylbool/pattern.hpp"
#include "weylbool/weyl_element.hpp"

namespace weylbool {

// Canonical word has pairwise distinct letters.
bool is_boolean_word(const WeylElement& w);

// [id, w] is poset-isomorphic to the boolean lattice of rank l(w). Sizes are
// compared first; an explicit isomorphism through the atoms is then checked.
// Throws when l(w) exceeds the bound.
bool is_boolean_interval(const WeylElement& w, int bound = kDefaultIntervalBound);

struct BooleanVerdict {
  bool via_word = false;
  std::optional<bool> via_interval;
  bool via_bp = false;
  bool via_linear = false;

  // A contained forbidden pattern, when there is one.
  std::optional<Pattern> bp_witness;
  std::optional<Pattern> linear_witness;
  std::optional<LinearEmbedding> linear_embedding;

  bool consistent() const {
    return via_word == via_bp && via_word == via_linear && (!via_interval || *via_interval == via_word);
  }
};

/// Holds the forbidden pattern lists and the BP embedding tables. One analyzer
/// per thread.
class BooleanAnalyzer {
 public:
  BooleanAnalyzer();

  // Avoids every pattern of the forbidden BP list; reports the first contained one.
  bool is_boolean_bp(const WeylElement& w, std::optional<Pattern>* witness = nullptr);

  // Avoids the three linear patterns on every irreducible component.
  bool is_boolean_linear(const WeylElement& w, std::optional<Pattern>* witness = nullptr,
                         std::optional<LinearEmbedding>* embedding = nullptr);

  // Interval verdict only when l(w) <= interval_bound.
  BooleanVerdict verdict(const WeylElement& w, int interval_bound = kDefaultIntervalBound);

  const PatternSet& bp_patterns() const { return forbidden_; }
  const std::vector<Pattern>& linear_patterns() const { return linear_; }

 private:
  PatternSet forbidden_;
  std::vector<Pattern> linear_;
  BpMatcher matcher_;
};

bool is_boolean_bp(const WeylElement& w);
bool is_boolean_linear(const WeylElement& w);

}  // namespace weylbool
