#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylbool/root_set.hpp"
#include "weylbool/root_system.hpp"
#include "weylbool/sub_root_system.hpp"
#include "weylbool/weyl_element.hpp"

namespace weylbool {

// Identity of a pattern across ambient systems: the type of R and the
// inversion set, minimized over diagram automorphisms of R.
struct PatternKey {
  std::string type;
  RootSet inversions;

  friend bool operator==(const PatternKey&, const PatternKey&) = default;
  friend bool operator<(const PatternKey& a, const PatternKey& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.inversions < b.inversions;
  }
};

/// An element pi of W(R) used as a pattern; R is a standard irreducible system.
class Pattern {
 public:
  explicit Pattern(WeylElement element);

  // "<type>:<word>", e.g. "A3:2 1 3 2". Throws std::invalid_argument.
  static Pattern parse(std::string_view literal);
  static Pattern of(CartanType type, std::string_view word);

  const WeylElement& element() const { return element_; }
  const RootSystem& system() const { return element_.system(); }
  const RootSystemPtr& system_ptr() const { return element_.system_ptr(); }
  int rank() const { return system().rank(); }

  // Type label and canonical word, the inverse of parse.
  std::string literal() const;
  const PatternKey& key() const { return key_; }

 private:
  WeylElement element_;
  PatternKey key_;
};

PatternKey pattern_key(const WeylElement& w);

// Display order: rank, then type label, then length, then canonical word.
bool pattern_less(const Pattern& a, const Pattern& b);

/// Patterns deduplicated by key, kept in display order.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Pattern> items);

  // false when an equal key is already present.
  bool insert(const Pattern& p);
  bool contains(const PatternKey& k) const { return index_.count(k) > 0; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Pattern>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  PatternSet unite(const PatternSet& o) const;
  std::vector<PatternKey> keys() const;

 private:
  std::vector<Pattern> items_;
  std::map<PatternKey, int> index_;
};

/// Images beta_1..beta_k of the simple roots of R, as indices into Phi^+.
struct LinearEmbedding {
  std::vector<int> images;

  std::vector<Root> image_roots(const RootSystem& ambient) const;
};

// Tuple search over (Phi^+)^k; the first witness in lexicographic index order.
std::optional<LinearEmbedding> linear_contains(const WeylElement& w, const Pattern& pi);

// Root-by-root check of an embedding against the definition, using root
// arithmetic only. Returns a description of the first violated condition.
std::optional<std::string> check_linear_embedding(const WeylElement& w, const Pattern& pi,
                                                  std::span<const Root> images);

struct BPWitness {
  SubRootSystem sub;
  // iso[i]: position in sub.simple_roots() of the image of alpha_{i+1} of R.
  std::vector<int> iso;

  // Images of the simple roots of R in the ambient system.
  std::vector<Root> simple_images() const;
};

// Checks Cartan integers, positive systems and the restricted inversion set.
std::optional<std::string> check_bp_witness(const WeylElement& w, const Pattern& pi,
                                            const BPWitness& witness);

/// Every positive-system-preserving isomorphism R -> Phi ∩ E over all
/// sub-root-systems of Phi of rank(R), with the image of each root of R^+
/// precomputed. Immutable after construction.
class EmbeddingTable {
 public:
  EmbeddingTable(RootSystemPtr ambient, RootSystemPtr pattern_system);

  const RootSystemPtr& ambient() const { return ambient_; }
  const RootSystemPtr& pattern_system() const { return pattern_; }
  std::size_t size() const { return embeddings_.size(); }

  // Index of the first embedding under which w restricts to pi, or -1.
  int find(const RootSet& w_inversions, const RootSet& pi_inversions) const;
  BPWitness witness(int embedding) const;

 private:
  struct Embedding {
    int record;
    std::vector<int> iso;
    std::vector<int> image;  // ambient index of the image of each root of R^+
  };

  RootSystemPtr ambient_;
  RootSystemPtr pattern_;
  std::shared_ptr<const SubsystemCatalog> catalog_;
  std::vector<Embedding> embeddings_;
};

/// Caller-owned cache of embedding tables keyed by (ambient, pattern system).
/// Not synchronized; use one per thread.
class BpMatcher {
 public:
  const EmbeddingTable& table(const RootSystemPtr& ambient, const RootSystemPtr& pattern_system);

  bool contains(const WeylElement& w, const Pattern& pi);
  std::optional<BPWitness> find(const WeylElement& w, const Pattern& pi);

 private:
  std::map<std::pair<const RootSystem*, const RootSystem*>, std::unique_ptr<EmbeddingTable>> tables_;
  std::vector<RootSystemPtr> keep_alive_;
};

std::optional<BPWitness> bp_contains(const WeylElement& w, const Pattern& pi);

// Irreducible types of the given rank up to isomorphism (no C2, no D3).
std::vector<CartanType> irreducible_types(int rank);

// All sigma in W(Theta), Theta irreducible of rank <= max_rank, containing
// the linear pattern pi. Throws when a group exceeds the enumeration bound.
PatternSet compute_P(const Pattern& pi, int max_rank);

PatternSet reduce(const PatternSet& p, BpMatcher& matcher);
PatternSet quotient(const PatternSet& p, const PatternSet& s, BpMatcher& matcher);
PatternSet reduce(const PatternSet& p);
PatternSet quotient(const PatternSet& p, const PatternSet& s);

// The forbidden patterns for boolean elements, 15 in all.
PatternSet forbidden_bp_patterns();

// The three linear patterns s1s2s1 in A2, s2s1s3s2 in A3, s2s1s3s4s2 in D4.
std::vector<Pattern> linear_boolean_patterns();

}  // namespace weylbool
