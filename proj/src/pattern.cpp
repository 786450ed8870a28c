#include "weylbool/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weylbool {

namespace {

bool fits_key(const Root& r) {
  for (int c : r.coeffs()) {
    if (c <= -64 || c >= 64) return false;
  }
  return true;
}

int positive_index(const RootSystem& rs, const Root& r) {
  if (!fits_key(r)) return -1;
  return rs.index_of_key(r.key());
}

Root zero_root(int rank) { return Root(std::vector<int>(rank, 0)); }

}  // namespace

PatternKey pattern_key(const WeylElement& w) {
  const RootSystem& rs = w.system();
  PatternKey key{rs.label(), w.inversions()};
  for (const auto& perm : rs.diagram_automorphisms()) {
    RootSet image;
    w.inversions().for_each([&](int j) {
      const Root& r = rs.root(j);
      Root moved = zero_root(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) moved[perm[i]] = r[i];
      image.set(rs.index_of_key(moved.key()));
    });
    if (image < key.inversions) key.inversions = image;
  }
  return key;
}

Pattern::Pattern(WeylElement element) : element_(std::move(element)) {
  if (!element_.system().cartan_type()) {
    throw std::invalid_argument("patterns live in standard irreducible systems, not " +
                                element_.system().label());
  }
  key_ = pattern_key(element_);
}

Pattern Pattern::of(CartanType type, std::string_view word) {
  auto [w, reduced] = WeylElement::from_word(standard_system(type), parse_word(word));
  (void)reduced;
  return Pattern(std::move(w));
}

Pattern Pattern::parse(std::string_view literal) {
  auto colon = literal.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("pattern literal '" + std::string(literal) + "' lacks '<type>:'");
  }
  return of(CartanType::parse(literal.substr(0, colon)), literal.substr(colon + 1));
}

std::string Pattern::literal() const {
  return system().label() + ":" + format_word(element_.canonical_word());
}

bool pattern_less(const Pattern& a, const Pattern& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  if (a.system().label() != b.system().label()) return a.system().label() < b.system().label();
  if (a.element().length() != b.element().length()) return a.element().length() < b.element().length();
  const Word wa = a.element().canonical_word(), wb = b.element().canonical_word();
  if (wa != wb) return wa < wb;
  return a.key() < b.key();
}

PatternSet::PatternSet(std::initializer_list<Pattern> items) {
  for (const auto& p : items) insert(p);
}

bool PatternSet::insert(const Pattern& p) {
  if (index_.count(p.key())) return false;
  auto pos = std::lower_bound(items_.begin(), items_.end(), p, pattern_less);
  items_.insert(pos, p);
  index_.clear();
  for (std::size_t i = 0; i < items_.size(); ++i) index_.emplace(items_[i].key(), static_cast<int>(i));
  return true;
}

PatternSet PatternSet::unite(const PatternSet& o) const {
  PatternSet out = *this;
  for (const auto& p : o) out.insert(p);
  return out;
}

std::vector<PatternKey> PatternSet::keys() const {
  std::vector<PatternKey> out;
  for (const auto& p : items_) out.push_back(p.key());
  return out;
}

std::vector<Root> LinearEmbedding::image_roots(const RootSystem& ambient) const {
  std::vector<Root> out;
  for (int i : images) out.push_back(ambient.root(i));
  return out;
}

std::optional<LinearEmbedding> linear_contains(const WeylElement& w, const Pattern& pi) {
  const RootSystem& R = pi.system();
  const RootSystem& P = w.system();
  const int k = R.rank();
  const int m = P.num_positive();
  const RootSet& winv = w.inversions();
  const RootSet& pinv = pi.element().inversions();
  // Roots of R^+ checked once their last supporting simple root is assigned.
  std::vector<std::vector<int>> check_at(k);
  for (int r = k; r < R.num_positive(); ++r) {
    int last = 0;
    for (int i = 0; i < k; ++i)
      if (R.root(r)[i] != 0) last = i;
    check_at[last].push_back(r);
  }

  std::vector<int> beta(k, -1);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int b = 0; b < m; ++b) {
      if (winv.test(b) != pinv.test(i)) continue;
      beta[i] = b;
      bool ok = true;
      for (int r : check_at[i]) {
        const Root& rr = R.root(r);
        Root img = zero_root(P.rank());
        for (int j = 0; j <= i; ++j) {
          if (rr[j] != 0) img = img + P.root(beta[j]) * rr[j];
        }
        const int idx = positive_index(P, img);
        if (idx < 0 || winv.test(idx) != pinv.test(r)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, i + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return LinearEmbedding{beta};
}

std::optional<std::string> check_linear_embedding(const WeylElement& w, const Pattern& pi,
                                                  std::span<const Root> images) {
  const RootSystem& R = pi.system();
  const RootSystem& P = w.system();
  if (static_cast<int>(images.size()) != R.rank()) return "expected one image per simple root of " + R.label();
  for (const Root& r : R.positive_roots()) {
    Root img = zero_root(P.rank());
    for (int j = 0; j < R.rank(); ++j) {
      if (images[j].rank() != P.rank()) return "image of wrong rank";
      img = img + images[j] * r[j];
    }
    const int idx = positive_index(P, img);
    if (idx < 0) return r.to_string() + " maps to " + img.to_string() + ", not a positive root";
    const bool want = pi.element().inversions().test(*R.index_of(r));
    if (w.inversions().test(idx) != want) {
      return r.to_string() + (want ? " is an inversion" : " is not an inversion") + " but its image " +
             img.to_string() + (want ? " is not" : " is");
    }
  }
  return std::nullopt;
}

std::vector<Root> BPWitness::simple_images() const {
  std::vector<Root> out;
  for (int i : iso) out.push_back(sub.parent()->root(sub.simple_roots()[i]));
  return out;
}

std::optional<std::string> check_bp_witness(const WeylElement& w, const Pattern& pi,
                                            const BPWitness& witness) {
  const RootSystem& R = pi.system();
  const RootSystem& P = w.system();
  const SubRootSystem& sub = witness.sub;
  if (sub.parent().get() != &P) return "sub-root-system of another system";
  const int k = R.rank();
  if (sub.rank() != k || static_cast<int>(witness.iso.size()) != k) return "rank mismatch";
  auto gamma = witness.simple_images();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int c = 2 * P.inner(gamma[i], gamma[j]) / P.inner(gamma[i], gamma[i]);
      if (c != R.cartan(i, j)) return "Cartan integer mismatch at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  }
  RootSet hit;
  for (const Root& r : R.positive_roots()) {
    Root img = zero_root(P.rank());
    for (int j = 0; j < k; ++j) img = img + gamma[j] * r[j];
    const int idx = positive_index(P, img);
    if (idx < 0 || !sub.positive_roots().test(idx)) return r.to_string() + " leaves the positive roots of the sub-system";
    if (hit.test(idx)) return "map is not injective";
    hit.set(idx);
    if (w.inversions().test(idx) != pi.element().inversions().test(*R.index_of(r))) {
      return "restriction differs from the pattern at " + r.to_string();
    }
  }
  if (hit != sub.positive_roots()) return "map is not onto the positive roots of the sub-system";
  return std::nullopt;
}

EmbeddingTable::EmbeddingTable(RootSystemPtr ambient, RootSystemPtr pattern_system)
    : ambient_(std::move(ambient)), pattern_(std::move(pattern_system)) {
  const RootSystem& P = *ambient_;
  const RootSystem& R = *pattern_;
  const int k = R.rank();
  catalog_ = std::make_shared<const SubsystemCatalog>(ambient_, k);
  auto records = catalog_->of_rank(k);
  for (std::size_t rec = 0; rec < records.size(); ++rec) {
    const auto& sr = records[rec];
    if (sr.roots.count() != R.num_positive()) continue;
    std::vector<std::vector<int>> cs(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a) {
      const Root& ga = P.root(sr.simple[a]);
      for (int b = 0; b < k; ++b) cs[a][b] = 2 * P.inner(ga, P.root(sr.simple[b])) / P.inner(ga, ga);
    }
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = 0; j < k && ok; ++j) ok = cs[sigma[i]][sigma[j]] == R.cartan(i, j);
      if (!ok) continue;
      Embedding e{static_cast<int>(rec), sigma, {}};
      for (const Root& r : R.positive_roots()) {
        Root img = zero_root(P.rank());
        for (int j = 0; j < k; ++j) img = img + P.root(sr.simple[sigma[j]]) * r[j];
        const int idx = positive_index(P, img);
        if (idx < 0 || !sr.roots.test(idx)) throw std::logic_error("embedding leaves the sub-system");
        e.image.push_back(idx);
      }
      embeddings_.push_back(std::move(e));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

int EmbeddingTable::find(const RootSet& w_inversions, const RootSet& pi_inversions) const {
  for (std::size_t e = 0; e < embeddings_.size(); ++e) {
    const auto& img = embeddings_[e].image;
    bool match = true;
    for (std::size_t r = 0; r < img.size() && match; ++r) {
      match = w_inversions.test(img[r]) == pi_inversions.test(static_cast<int>(r));
    }
    if (match) return static_cast<int>(e);
  }
  return -1;
}

BPWitness EmbeddingTable::witness(int embedding) const {
  const auto& e = embeddings_.at(embedding);
  return BPWitness{catalog_->materialize(catalog_->of_rank(pattern_->rank())[e.record]), e.iso};
}

const EmbeddingTable& BpMatcher::table(const RootSystemPtr& ambient, const RootSystemPtr& pattern_system) {
  auto& slot = tables_[{ambient.get(), pattern_system.get()}];
  if (!slot) {
    slot = std::make_unique<EmbeddingTable>(ambient, pattern_system);
    keep_alive_.push_back(ambient);
    keep_alive_.push_back(pattern_system);
  }
  return *slot;
}

bool BpMatcher::contains(const WeylElement& w, const Pattern& pi) {
  return table(w.system_ptr(), pi.system_ptr()).find(w.inversions(), pi.element().inversions()) >= 0;
}

std::optional<BPWitness> BpMatcher::find(const WeylElement& w, const Pattern& pi) {
  const auto& t = table(w.system_ptr(), pi.system_ptr());
  const int e = t.find(w.inversions(), pi.element().inversions());
  if (e < 0) return std::nullopt;
  return t.witness(e);
}

std::optional<BPWitness> bp_contains(const WeylElement& w, const Pattern& pi) {
  BpMatcher m;
  return m.find(w, pi);
}

std::vector<CartanType> irreducible_types(int rank) {
  std::vector<CartanType> out;
  if (rank < 1) return out;
  out.push_back({Family::A, rank});
  if (rank >= 2) out.push_back({Family::B, rank});
  if (rank >= 3) out.push_back({Family::C, rank});
  if (rank >= 4) out.push_back({Family::D, rank});
  if (rank >= 6 && rank <= 8) out.push_back({Family::E, rank});
  if (rank == 4) out.push_back({Family::F, 4});
  if (rank == 2) out.push_back({Family::G, 2});
  return out;
}

PatternSet compute_P(const Pattern& pi, int max_rank) {
  PatternSet out;
  for (int r = 1; r <= max_rank; ++r) {
    for (const auto& t : irreducible_types(r)) {
      auto rs = standard_system(t);
      for_each_element(rs, [&](const WeylElement& w) {
        if (linear_contains(w, pi)) out.insert(Pattern(w));
      });
    }
  }
  return out;
}

PatternSet reduce(const PatternSet& p, BpMatcher& matcher) {
  PatternSet out;
  for (const auto& w : p) {
    bool minimal = true;
    for (const auto& pi : p) {
      if (pi.key() == w.key()) continue;
      if (matcher.contains(w.element(), pi)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(w);
  }
  return out;
}

PatternSet quotient(const PatternSet& p, const PatternSet& s, BpMatcher& matcher) {
  PatternSet out;
  for (const auto& w : p) {
    bool keep = true;
    for (const auto& sigma : s) {
      if (matcher.contains(w.element(), sigma)) {
        keep = false;
        break;
      }
    }
    if (keep) out.insert(w);
  }
  return out;
}

PatternSet reduce(const PatternSet& p) {
  BpMatcher m;
  return reduce(p, m);
}

PatternSet quotient(const PatternSet& p, const PatternSet& s) {
  BpMatcher m;
  return quotient(p, s, m);
}

PatternSet forbidden_bp_patterns() {
  PatternSet out;
  for (const char* lit : {"A2:1 2 1", "A3:2 1 3 2", "B2:1 2 1", "B2:2 1 2", "B2:1 2 1 2", "B3:2 1 3 2",
                          "C3:2 1 3 2", "D4:2 1 3 4 2"}) {
    out.insert(Pattern::parse(lit));
  }
  for_each_element(standard_system({Family::G, 2}), [&](const WeylElement& w) {
    if (w.length() >= 3) out.insert(Pattern(w));
  });
  return out;
}

std::vector<Pattern> linear_boolean_patterns() {
  return {Pattern::parse("A2:1 2 1"), Pattern::parse("A3:2 1 3 2"), Pattern::parse("D4:2 1 3 4 2")};
}

}  // namespace weylbool
