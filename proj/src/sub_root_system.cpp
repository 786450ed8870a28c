#include "weylbool/sub_root_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "linalg.hpp"

namespace weylbool {

std::vector<int> indecomposable_roots(const RootSystem& rs, const RootSet& roots) {
  RootSet decomposable;
  roots.for_each([&](int j) {
    roots.for_each([&](int k) {
      if (k < j) return;
      const int s = rs.sum_index(j, k);
      if (s >= 0 && roots.test(s)) decomposable.set(s);
    });
  });
  std::vector<int> out;
  roots.for_each([&](int j) {
    if (!decomposable.test(j)) out.push_back(j);
  });
  return out;
}

std::string describe_components(const RootSystem& rs) {
  std::vector<std::string> parts;
  for (const auto& comp : rs.components()) {
    GramMatrix g(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = 0; b < comp.size(); ++b) g[a][b] = rs.gram(comp[a], comp[b]);
    auto piece = RootSystem::from_gram(std::move(g), "component");
    auto t = classify_irreducible(*piece);
    parts.push_back(t ? t->to_string() : "?" + std::to_string(comp.size()));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += 'x';
    out += parts[i];
  }
  return out;
}

class SubRootSystemBuilder {
 public:
  static SubRootSystem make(RootSystemPtr parent, const RootSet& positive) {
    SubRootSystem sub;
    const RootSystem& p = *parent;
    sub.positive_ = positive;
    sub.simple_ = indecomposable_roots(p, positive);
    const int k = static_cast<int>(sub.simple_.size());
    GramMatrix g(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) g[a][b] = p.inner(p.root(sub.simple_[a]), p.root(sub.simple_[b]));
    auto probe = RootSystem::from_gram(g, "sub");
    auto type = probe->is_irreducible() ? classify_irreducible(*probe) : std::nullopt;
    std::string label = type ? type->to_string() : describe_components(*probe);
    sub.system_ = RootSystem::from_gram(std::move(g), std::move(label));
    const RootSystem& own = *sub.system_;
    if (own.num_positive() != positive.count()) {
      throw std::logic_error("sub-root-system size mismatch in " + p.label());
    }
    sub.to_parent_.resize(own.num_positive());
    for (int j = 0; j < own.num_positive(); ++j) {
      Root img(std::vector<int>(p.rank(), 0));
      const Root& r = own.root(j);
      for (int a = 0; a < k; ++a) img = img + p.root(sub.simple_[a]) * r[a];
      auto idx = p.index_of(img);
      if (!idx || !positive.test(*idx)) throw std::logic_error("sub-root-system image outside");
      sub.to_parent_[j] = *idx;
    }
    sub.parent_ = std::move(parent);
    return sub;
  }
};

SubRootSystem SubRootSystem::spanned_by(RootSystemPtr parent, std::span<const Root> generators) {
  if (generators.empty()) throw std::invalid_argument("empty generating set");
  for (const auto& g : generators) {
    if (!parent->contains(g)) throw std::invalid_argument("not a root of " + parent->label() + ": " + g.to_string());
  }
  linalg::SpanTest span(generators, parent->rank());
  RootSet positive;
  for (int j = 0; j < parent->num_positive(); ++j) {
    if (span.contains(parent->root(j))) positive.set(j);
  }
  return SubRootSystemBuilder::make(std::move(parent), positive);
}

SubRootSystem SubRootSystem::spanned_by_indices(RootSystemPtr parent, std::span<const int> indices) {
  std::vector<Root> gens;
  for (int i : indices) {
    if (i < 0 || i >= parent->num_positive()) throw std::invalid_argument("root index out of range");
    gens.push_back(parent->root(i));
  }
  return spanned_by(std::move(parent), gens);
}

SubRootSystem SubRootSystem::whole(RootSystemPtr parent) {
  RootSet all = parent->all_positive();
  return SubRootSystemBuilder::make(std::move(parent), all);
}

WeylElement restrict(const WeylElement& w, const SubRootSystem& sub) {
  if (&w.system() != sub.parent().get()) throw std::invalid_argument("sub-root-system of another system");
  RootSet inv;
  for (int j = 0; j < sub.system()->num_positive(); ++j) {
    if (w.inversions().test(sub.to_parent(j))) inv.set(j);
  }
  return ElementAccess::make(sub.system(), inv);
}

SubsystemCatalog::SubsystemCatalog(RootSystemPtr parent, int max_rank) : parent_(std::move(parent)) {
  const RootSystem& p = *parent_;
  const int top = std::min(max_rank, p.rank());
  const int m = p.num_positive();
  if (top < 1) return;
  levels_.resize(top);
  for (int j = 0; j < m; ++j) {
    RootSet s;
    s.set(j);
    levels_[0].push_back({s, {j}});
  }
  for (int k = 1; k < top; ++k) {
    std::unordered_set<RootSet, RootSetHash> seen;
    for (const auto& rec : levels_[k - 1]) {
      RootSet covered = rec.roots;
      std::vector<Root> gens;
      for (int s : rec.simple) gens.push_back(p.root(s));
      gens.emplace_back();
      for (int b = 0; b < m; ++b) {
        if (covered.test(b)) continue;
        gens.back() = p.root(b);
        linalg::SpanTest span(gens, p.rank());
        RootSet t;
        for (int j = 0; j < m; ++j) {
          if (span.contains(p.root(j))) t.set(j);
        }
        covered = covered | t;
        if (!seen.insert(t).second) continue;
        auto simple = indecomposable_roots(p, t);
        if (static_cast<int>(simple.size()) != k + 1) {
          throw std::logic_error("unexpected simple system size in " + p.label());
        }
        levels_[k].push_back({t, std::move(simple)});
      }
    }
  }
}

std::span<const SubspaceRecord> SubsystemCatalog::of_rank(int k) const {
  if (k < 1 || k > max_rank()) return {};
  return levels_[k - 1];
}

SubRootSystem SubsystemCatalog::materialize(const SubspaceRecord& rec) const {
  return SubRootSystemBuilder::make(parent_, rec.roots);
}

}  // namespace weylbool
