#include "weylbool/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylbool {

namespace {

std::string family_name(Family f) { return std::string(1, static_cast<char>(f)); }

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

// Backtracking search for permutations p with m2[p[i]][p[j]] == m1[i][j].
void matrix_isomorphisms(const std::vector<std::vector<int>>& m1,
                         const std::vector<std::vector<int>>& m2, bool first_only,
                         std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(m1.size());
  if (static_cast<int>(m2.size()) != n) return;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) {
      out.push_back(perm);
      return first_only;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = m2[c][c] == m1[i][i];
      for (int j = 0; j < i && ok; ++j) {
        ok = m2[perm[j]][c] == m1[j][i] && m2[c][perm[j]] == m1[i][j];
      }
      if (!ok) continue;
      used[c] = true;
      perm[i] = c;
      if (rec(i + 1)) return true;
      used[c] = false;
    }
    perm[i] = -1;
    return false;
  };
  rec(0);
}

}  // namespace

// ---------------------------------------------------------------- CartanType

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for type " +
                                family_name(family));
  }
  if (rank > kMaxRank) {
    throw std::invalid_argument("rank " + std::to_string(rank) + " exceeds the supported maximum " +
                                std::to_string(kMaxRank));
  }
}

std::string CartanType::to_string() const { return family_name(family) + std::to_string(rank); }

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed Cartan type '" + std::string(text) + "'");
  CartanType t;
  switch (text[0]) {
    case 'A': case 'a': t.family = Family::A; break;
    case 'B': case 'b': t.family = Family::B; break;
    case 'C': case 'c': t.family = Family::C; break;
    case 'D': case 'd': t.family = Family::D; break;
    case 'E': case 'e': t.family = Family::E; break;
    case 'F': case 'f': t.family = Family::F; break;
    case 'G': case 'g': t.family = Family::G; break;
    default: throw std::invalid_argument("unknown Cartan family in '" + std::string(text) + "'");
  }
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed rank in Cartan type '" + std::string(text) + "'");
  }
  t.validate();
  return t;
}

std::uint64_t CartanType::weyl_order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << rank) * factorial(rank);
    case Family::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case Family::E: return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

int CartanType::positive_root_count() const {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B:
    case Family::C: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// ---------------------------------------------------------------------- Root

Root::Root(std::span<const int> coeffs) : rank_(static_cast<int>(coeffs.size())) {
  if (rank_ > kMaxRank) throw std::invalid_argument("root has too many coefficients");
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

Root::Root(std::initializer_list<int> coeffs)
    : Root(std::span<const int>(coeffs.begin(), coeffs.size())) {}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.begin() + rank_, 0); }

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.begin() + rank_, [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() &&
         std::all_of(coeffs_.begin(), coeffs_.begin() + rank_, [](int c) { return c >= 0; });
}

bool Root::is_negative() const { return (-*this).is_positive(); }

std::vector<int> Root::support() const {
  if (!is_positive()) throw std::invalid_argument("support of non-positive root " + to_string());
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i) {
    if (coeffs_[i] > 0) out.push_back(i + 1);
  }
  return out;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (int i = 0; i < rank_; ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (int i = 0; i < rank_; ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (int i = 0; i < rank_; ++i) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Root Root::operator*(int k) const {
  Root r = *this;
  for (int i = 0; i < rank_; ++i) r.coeffs_[i] *= k;
  return r;
}

std::string Root::to_string() const {
  std::string s;
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(coeffs_[i]);
  }
  return s;
}

Root Root::parse(std::string_view text) {
  std::vector<int> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("malformed root coefficient '" + std::string(tok) + "'");
    }
    c.push_back(v);
    pos = next + 1;
  }
  return Root(std::span<const int>(c));
}

std::uint64_t Root::key() const {
  std::uint64_t k = static_cast<std::uint64_t>(rank_);
  for (int i = 0; i < rank_; ++i) {
    k = (k << 7) | static_cast<std::uint64_t>((coeffs_[i] + 64) & 0x7f);
  }
  return k;
}

bool canonical_less(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  for (int i = 0; i < a.rank(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool root_poset_leq(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("roots of different rank");
  for (int i = 0; i < a.rank(); ++i) {
    if (b[i] - a[i] < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- RootSystem

GramMatrix standard_gram(CartanType type) {
  type.validate();
  const int n = type.rank;
  GramMatrix g(n, std::vector<int>(n, 0));
  auto edge = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (type.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::B:
      // alpha_1..alpha_{n-1} long, alpha_n short.
      for (int i = 0; i + 1 < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -2);
      break;
    case Family::C:
      // alpha_1..alpha_{n-1} short, alpha_n long.
      for (int i = 0; i + 1 < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      edge(0, 2, -1);
      edge(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case Family::G:
      // alpha_1 long, alpha_2 short.
      g[0][0] = 6;
      g[1][1] = 2;
      edge(0, 1, -3);
      break;
  }
  return g;
}

RootSystemPtr RootSystem::build(CartanType type) {
  type.validate();
  return from_gram(standard_gram(type), type.to_string(), type);
}

RootSystemPtr standard_system(CartanType type) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, RootSystemPtr> cache;
  type.validate();
  std::lock_guard lock(mu);
  auto& slot = cache[{static_cast<char>(type.family), type.rank}];
  if (!slot) slot = RootSystem::build(type);
  return slot;
}

RootSystemPtr RootSystem::from_gram(GramMatrix gram, std::string label,
                                    std::optional<CartanType> type) {
  const int n = static_cast<int>(gram.size());
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("root system rank out of range");
  for (const auto& row : gram) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Gram matrix not square");
  }
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    if (gram[i][i] <= 0) throw std::invalid_argument("simple roots must have positive length");
    for (int j = 0; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix not symmetric");
      if ((2 * gram[i][j]) % gram[i][i] != 0) {
        throw std::invalid_argument("reflection coefficients are not integral");
      }
      cartan[i][j] = 2 * gram[i][j] / gram[i][i];
      if (i != j && cartan[i][j] > 0) throw std::invalid_argument("simple roots at acute angle");
    }
  }

  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->rank_ = n;
  rs->label_ = std::move(label);
  rs->type_ = type;
  rs->gram_ = std::move(gram);
  rs->cartan_ = std::move(cartan);

  auto reflect_raw = [&](int i, const Root& b) {
    int ip = 0;
    for (int j = 0; j < n; ++j) ip += b[j] * rs->gram_[i][j];
    Root r = b;
    r[i] -= 2 * ip / rs->gram_[i][i];
    return r;
  };

  std::vector<Root> roots;
  std::unordered_map<std::uint64_t, int> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    Root r{std::span<const int>(c)};
    seen.emplace(r.key(), 0);
    roots.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root c = reflect_raw(i, b);
      if (!c.is_positive()) continue;
      for (int j = 0; j < n; ++j) {
        if (std::abs(c[j]) >= 63) throw std::invalid_argument("root system is not finite");
      }
      if (seen.emplace(c.key(), 0).second) {
        roots.push_back(c);
        queue.push_back(c);
        if (static_cast<int>(roots.size()) > RootSet::kCapacity) {
          throw std::invalid_argument("root system is not finite or too large");
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), canonical_less);
  rs->positive_ = std::move(roots);
  const int m = rs->num_positive();
  for (int k = 0; k < m; ++k) rs->index_.emplace(rs->positive_[k].key(), k);

  rs->reflect_.assign(static_cast<std::size_t>(n) * m, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      rs->reflect_[i * m + j] = rs->index_.at(reflect_raw(i, rs->positive_[j]).key());
    }
  }
  rs->sum_.assign(static_cast<std::size_t>(m) * m, -1);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      auto it = rs->index_.find((rs->positive_[j] + rs->positive_[k]).key());
      if (it != rs->index_.end()) rs->sum_[j * m + k] = it->second;
    }
  }
  matrix_isomorphisms(rs->cartan_, rs->cartan_, false, rs->automorphisms_);
  std::sort(rs->automorphisms_.begin(), rs->automorphisms_.end());
  return rs;
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  if (r.rank() != rank_) return std::nullopt;
  int i = index_of_key(r.key());
  if (i < 0) return std::nullopt;
  return i;
}

bool RootSystem::contains(const Root& r) const {
  if (r.rank() != rank_) return false;
  return index_of(r).has_value() || index_of(-r).has_value();
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

Root RootSystem::reflect(int i, const Root& beta) const {
  if (i < 0 || i >= rank_) throw std::invalid_argument("simple root index out of range");
  if (!contains(beta)) throw std::invalid_argument("not a root of " + label_ + ": " + beta.to_string());
  int ip = 0;
  for (int j = 0; j < rank_; ++j) ip += beta[j] * gram_[i][j];
  Root r = beta;
  r[i] -= 2 * ip / gram_[i][i];
  return r;
}

RootSet RootSystem::all_positive() const {
  RootSet s;
  for (int i = 0; i < num_positive(); ++i) s.set(i);
  return s;
}

std::vector<std::vector<int>> RootSystem::components() const {
  std::vector<int> comp(rank_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < rank_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int t = 0; t < rank_; ++t) {
        if (comp[t] < 0 && gram_[members[k]][t] != 0) {
          comp[t] = comp[s];
          members.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::optional<CartanType> classify_irreducible(const RootSystem& rs) {
  if (!rs.is_irreducible()) return std::nullopt;
  const int r = rs.rank();
  std::vector<CartanType> candidates{{Family::A, r}};
  if (r >= 2) candidates.push_back({Family::B, r});
  if (r >= 3) candidates.push_back({Family::C, r});
  if (r >= 4) candidates.push_back({Family::D, r});
  if (r >= 6 && r <= 8) candidates.push_back({Family::E, r});
  if (r == 4) candidates.push_back({Family::F, 4});
  if (r == 2) candidates.push_back({Family::G, 2});
  std::vector<std::vector<int>> cart(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cart[i][j] = rs.cartan(i, j);
  for (const auto& t : candidates) {
    if (t.positive_root_count() != rs.num_positive()) continue;
    auto g = standard_gram(t);
    std::vector<std::vector<int>> ct(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) ct[i][j] = 2 * g[i][j] / g[i][i];
    std::vector<std::vector<int>> found;
    matrix_isomorphisms(cart, ct, true, found);
    if (!found.empty()) return t;
  }
  return std::nullopt;
}

}  // namespace weylbool
