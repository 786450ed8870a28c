#include "weylbool/boolean.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "weylbool/sub_root_system.hpp"

namespace weylbool {

bool is_boolean_word(const WeylElement& w) {
  Word word = w.canonical_word();
  std::sort(word.begin(), word.end());
  return std::adjacent_find(word.begin(), word.end()) == word.end();
}

bool is_boolean_interval(const WeylElement& w, int bound) {
  const int len = w.length();
  auto elems = bruhat_interval_elements(w, bound);
  const std::size_t n = elems.size();
  if (n != (std::size_t{1} << len)) return false;

  std::vector<int> sizes(len + 1, 0);
  for (const auto& e : elems) ++sizes[e.length()];
  long long binom = 1;
  for (int r = 0; r <= len; ++r) {
    if (sizes[r] != binom) return false;
    binom = binom * (len - r) / (r + 1);
  }

  // u -> atoms below u must be a bijection onto subsets that preserves and
  // reflects the order.
  std::vector<int> atoms;
  for (std::size_t i = 0; i < n; ++i)
    if (elems[i].length() == 1) atoms.push_back(static_cast<int>(i));
  std::vector<unsigned> below(n, 0);
  std::set<unsigned> seen;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (bruhat_leq(elems[atoms[a]], elems[i])) below[i] |= 1u << a;
    }
    if (std::popcount(below[i]) != elems[i].length() || !seen.insert(below[i]).second) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool subset = (below[i] & below[j]) == below[i];
      if (subset != bruhat_leq(elems[i], elems[j])) return false;
    }
  }
  return true;
}

BooleanAnalyzer::BooleanAnalyzer() : forbidden_(forbidden_bp_patterns()), linear_(linear_boolean_patterns()) {}

bool BooleanAnalyzer::is_boolean_bp(const WeylElement& w, std::optional<Pattern>* witness) {
  for (const auto& pi : forbidden_) {
    if (matcher_.contains(w, pi)) {
      if (witness) *witness = pi;
      return false;
    }
  }
  return true;
}

bool BooleanAnalyzer::is_boolean_linear(const WeylElement& w, std::optional<Pattern>* witness,
                                        std::optional<LinearEmbedding>* embedding) {
  auto check = [&](const WeylElement& x) {
    for (const auto& pi : linear_) {
      if (auto emb = linear_contains(x, pi)) {
        if (witness) *witness = pi;
        if (embedding) *embedding = std::move(emb);
        return false;
      }
    }
    return true;
  };
  const auto comps = w.system().components();
  if (comps.size() == 1) return check(w);
  for (const auto& comp : comps) {
    std::vector<Root> gens;
    for (int i : comp) gens.push_back(w.system().simple_root(i));
    auto sub = SubRootSystem::spanned_by(w.system_ptr(), gens);
    // Embeddings found here are in component coordinates, so none is reported.
    if (!check(restrict(w, sub))) {
      if (embedding) embedding->reset();
      return false;
    }
  }
  return true;
}

BooleanVerdict BooleanAnalyzer::verdict(const WeylElement& w, int interval_bound) {
  BooleanVerdict v;
  v.via_word = is_boolean_word(w);
  if (w.length() <= interval_bound) v.via_interval = is_boolean_interval(w, interval_bound);
  v.via_bp = is_boolean_bp(w, &v.bp_witness);
  v.via_linear = is_boolean_linear(w, &v.linear_witness, &v.linear_embedding);
  return v;
}

bool is_boolean_bp(const WeylElement& w) { return BooleanAnalyzer().is_boolean_bp(w); }

bool is_boolean_linear(const WeylElement& w) { return BooleanAnalyzer().is_boolean_linear(w); }

}  // namespace weylbool
