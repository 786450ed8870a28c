#include "weylbool/weyl_element.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

namespace weylbool {

std::string format_word(std::span<const int> word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(word[i]);
  }
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    auto tok = text.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
      throw std::invalid_argument("malformed word letter '" + std::string(tok) + "'");
    }
    w.push_back(v);
    pos = end;
  }
  return w;
}

RootSet apply_simple(const RootSystem& rs, const RootSet& inv, int simple_index) {
  RootSet out;
  inv.for_each([&](int j) {
    if (j != simple_index) out.set(rs.reflect_index(simple_index, j));
  });
  if (!inv.test(simple_index)) out.set(simple_index);
  return out;
}

WeylElement WeylElement::identity(RootSystemPtr system) { return {std::move(system), RootSet{}}; }

std::pair<WeylElement, bool> WeylElement::from_word(RootSystemPtr system,
                                                    std::span<const int> word) {
  RootSet inv;
  bool reduced = true;
  for (int letter : word) {
    if (letter < 1 || letter > system->rank()) {
      throw std::invalid_argument("letter " + std::to_string(letter) + " out of range for " +
                                  system->label());
    }
    if (inv.test(letter - 1)) reduced = false;
    inv = apply_simple(*system, inv, letter - 1);
  }
  return {WeylElement(std::move(system), inv), reduced};
}

WeylElement WeylElement::from_inversions(RootSystemPtr system, const RootSet& inversions) {
  bool in_range = true;
  inversions.for_each([&](int j) { in_range = in_range && j < system->num_positive(); });
  if (!in_range) throw std::invalid_argument("inversion index out of range");
  if (auto bad = biconvex_violation(*system, inversions)) {
    throw std::invalid_argument("not biconvex: roots " + system->root(bad->first).to_string() +
                                " and " + system->root(bad->second).to_string() +
                                " violate closure at their sum " +
                                system->root(system->sum_index(bad->first, bad->second)).to_string());
  }
  return {std::move(system), inversions};
}

WeylElement WeylElement::from_inversions(RootSystemPtr system, std::span<const Root> inversions) {
  RootSet set;
  for (const Root& r : inversions) {
    auto idx = system->index_of(r);
    if (!idx) throw std::invalid_argument("not a positive root of " + system->label() + ": " + r.to_string());
    set.set(*idx);
  }
  return from_inversions(std::move(system), set);
}

std::vector<Root> WeylElement::inversion_roots() const {
  std::vector<Root> out;
  inversions_.for_each([&](int j) { out.push_back(system_->root(j)); });
  return out;
}

std::vector<int> WeylElement::descents() const {
  std::vector<int> out;
  for (int i = 0; i < system_->rank(); ++i) {
    if (inversions_.test(i)) out.push_back(i + 1);
  }
  return out;
}

WeylElement WeylElement::times_simple(int letter) const {
  if (letter < 1 || letter > system_->rank()) throw std::invalid_argument("letter out of range");
  return {system_, apply_simple(*system_, inversions_, letter - 1)};
}

Word WeylElement::canonical_word() const {
  Word w;
  RootSet inv = inversions_;
  const int r = system_->rank();
  while (!inv.empty()) {
    int i = 0;
    while (i < r && !inv.test(i)) ++i;
    if (i == r) throw std::logic_error("nonempty inversion set without a simple root");
    w.push_back(i + 1);
    inv = apply_simple(*system_, inv, i);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<std::pair<int, int>> biconvex_violation(const RootSystem& rs, const RootSet& set) {
  const int m = rs.num_positive();
  for (int j = 0; j < m; ++j) {
    const bool in_j = set.test(j);
    for (int k = j + 1; k < m; ++k) {
      const int s = rs.sum_index(j, k);
      if (s < 0) continue;
      const bool in_k = set.test(k);
      if (in_j == in_k && set.test(s) != in_j) return std::pair{j, k};
    }
  }
  return std::nullopt;
}

bool is_biconvex(const RootSystem& rs, const RootSet& set) {
  return !biconvex_violation(rs, set).has_value();
}

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  if (&u.system() != &v.system()) throw std::invalid_argument("elements of different Weyl groups");
  WeylElement out = u;
  for (int letter : v.canonical_word()) out = out.times_simple(letter);
  return out;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  if (&u.system() != &w.system()) throw std::invalid_argument("elements of different Weyl groups");
  if (u.length() > w.length()) return false;
  const Word word = w.canonical_word();
  WeylElement cur = u;
  int remaining = static_cast<int>(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it, --remaining) {
    if (cur.length() > remaining) return false;
    if (cur.has_descent(*it)) cur = cur.times_simple(*it);
  }
  return cur.is_identity();
}

std::vector<WeylElement> bruhat_interval_elements(const WeylElement& w, int bound) {
  if (w.length() > bound) {
    throw std::invalid_argument("length " + std::to_string(w.length()) +
                                " exceeds the interval bound " + std::to_string(bound));
  }
  const RootSystem& rs = w.system();
  std::vector<RootSet> items{RootSet{}};
  std::unordered_set<RootSet, RootSetHash> seen{RootSet{}};
  for (int letter : w.canonical_word()) {
    const std::size_t n = items.size();
    for (std::size_t k = 0; k < n; ++k) {
      RootSet y = apply_simple(rs, items[k], letter - 1);
      if (seen.insert(y).second) items.push_back(y);
    }
  }
  std::sort(items.begin(), items.end(), [](const RootSet& a, const RootSet& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  std::vector<WeylElement> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(ElementAccess::make(w.system_ptr(), s));
  return out;
}

std::vector<int> BruhatInterval::rank_sizes() const {
  int top = 0;
  for (const auto& e : elements) top = std::max(top, e.length());
  std::vector<int> sizes(top + 1, 0);
  for (const auto& e : elements) ++sizes[e.length()];
  return sizes;
}

BruhatInterval bruhat_interval(const WeylElement& w, int bound) {
  BruhatInterval iv;
  iv.elements = bruhat_interval_elements(w, bound);
  const std::size_t n = iv.elements.size();
  iv.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      iv.leq[a][b] = bruhat_leq(iv.elements[a], iv.elements[b]);
    }
  }
  return iv;
}

std::uint64_t for_each_element(const RootSystemPtr& rs,
                               const std::function<void(const WeylElement&)>& visit,
                               std::uint64_t bound) {
  if (rs->cartan_type() && rs->cartan_type()->weyl_order() > bound) {
    throw std::invalid_argument("|W(" + rs->label() + ")| = " +
                                std::to_string(rs->cartan_type()->weyl_order()) +
                                " exceeds the enumeration bound " + std::to_string(bound));
  }
  std::vector<RootSet> layer{RootSet{}};
  std::uint64_t total = 0;
  while (!layer.empty()) {
    total += layer.size();
    if (total > bound) throw std::invalid_argument("group order exceeds the enumeration bound");
    for (const auto& s : layer) visit(ElementAccess::make(rs, s));
    std::vector<RootSet> next;
    std::unordered_set<RootSet, RootSetHash> seen;
    for (const auto& s : layer) {
      for (int i = 0; i < rs->rank(); ++i) {
        if (s.test(i)) continue;
        RootSet y = apply_simple(*rs, s, i);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  return total;
}

std::vector<WeylElement> enumerate_group(const RootSystemPtr& rs, std::uint64_t bound) {
  std::vector<WeylElement> out;
  for_each_element(rs, [&](const WeylElement& w) { out.push_back(w); }, bound);
  return out;
}

}  // namespace weylbool
