#include "weylbool/permutation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace weylbool {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation digit '" + std::string(1, ch) + "'");
      v.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      auto tok = text.substr(pos, end - pos);
      int x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("bad permutation entry '" + std::string(tok) + "'");
      }
      v.push_back(x);
      pos = end + 1;
    }
  }
  if (v.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int i = 0; i < size(); ++i) inv[w_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

int Permutation::inversions() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) c += w_[i] > w_[j];
  return c;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (size() > 9 && i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
  const int n = w.size(), k = p.size();
  if (k > n) return false;
  const auto& wv = w.one_line();
  const auto& pv = p.one_line();
  std::array<int, 16> pos{};
  auto rec = [&](auto&& self, int t, int start) -> bool {
    if (t == k) return true;
    for (int i = start; i <= n - (k - t); ++i) {
      bool ok = true;
      for (int s = 0; s < t && ok; ++s) ok = (wv[pos[s]] < wv[i]) == (pv[s] < pv[t]);
      if (!ok) continue;
      pos[t] = i;
      if (self(self, t + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

Word reduced_word(const Permutation& w) {
  std::vector<int> v = w.one_line();
  Word word;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        word.push_back(static_cast<int>(j) + 1);
        moved = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement to_weyl_element(const Permutation& w) {
  if (w.size() < 2) throw std::invalid_argument("S_n with n >= 2 is needed for A_{n-1}");
  auto rs = standard_system({Family::A, w.size() - 1});
  return WeylElement::from_word(rs, reduced_word(w)).first;
}

Permutation from_weyl_element(const WeylElement& w) {
  const auto& t = w.system().cartan_type();
  if (!t || t->family != Family::A) throw std::invalid_argument("type A element expected");
  Permutation p = Permutation::identity(t->rank + 1);
  std::vector<int> v = p.one_line();
  for (int letter : w.canonical_word()) std::swap(v[letter - 1], v[letter]);
  return Permutation(std::move(v));
}

std::vector<int> max_letter_multiplicity(const Permutation& w) {
  const int n = w.size();
  if (n > kMaxMultiplicitySize) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxMultiplicitySize));
  }
  using Counts = std::array<std::int8_t, kMaxMultiplicitySize>;
  std::unordered_map<std::uint64_t, Counts> memo;
  auto encode = [](const std::vector<int>& v) {
    std::uint64_t c = 0;
    for (int x : v) c = (c << 4) | static_cast<std::uint64_t>(x);
    return c;
  };
  auto rec = [&](auto&& self, std::vector<int>& v) -> Counts {
    const std::uint64_t code = encode(v);
    if (auto it = memo.find(code); it != memo.end()) return it->second;
    Counts best{};
    for (int j = 0; j + 1 < n; ++j) {
      if (v[j] < v[j + 1]) continue;
      std::swap(v[j], v[j + 1]);
      Counts sub = self(self, v);
      std::swap(v[j], v[j + 1]);
      ++sub[j];
      for (int i = 0; i < n - 1; ++i) best[i] = std::max(best[i], sub[i]);
    }
    memo.emplace(code, best);
    return best;
  };
  std::vector<int> v = w.one_line();
  Counts g = rec(rec, v);
  return std::vector<int>(g.begin(), g.begin() + std::max(0, n - 1));
}

bool is_k_boolean(const Permutation& w, int k) {
  auto g = max_letter_multiplicity(w);
  return std::all_of(g.begin(), g.end(), [k](int x) { return x <= k; });
}

bool is_2boolean_patterns(const Permutation& w) {
  static const Permutation forbidden[] = {Permutation::parse("3421"), Permutation::parse("4312"),
                                          Permutation::parse("4321"), Permutation::parse("456123")};
  for (const auto& p : forbidden) {
    if (contains_pattern(w, p)) return false;
  }
  return true;
}

ABCStats abc_stats(const Permutation& w) {
  ABCStats s;
  if (w.size() == 0 || w(1) == 1) return s;
  s.defined = true;
  const int p = w.inverse()(1);
  for (int i = 2; i <= w.size(); ++i) {
    if (i < p && w(i) > 1 && w(i) < w(1)) ++s.c;
    if (i < p && w(i) > w(1)) ++s.a;
    if (i > p && w(i) > 1 && w(i) < w(1)) ++s.b;
  }
  return s;
}

namespace {

// Visits every w in S_n, splitting the scan by w(1) over the given threads.
template <typename Acc, typename Visit>
Acc scan_symmetric_group(int n, int threads, Visit visit) {
  threads = std::clamp(threads, 1, std::max(1, n));
  std::vector<Acc> partial(threads);
  auto work = [&](int t) {
    for (int first = 1 + t; first <= n; first += threads) {
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
      do {
        std::vector<int> line{first};
        line.insert(line.end(), rest.begin(), rest.end());
        visit(Permutation(std::move(line)), partial[t]);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Acc total{};
  for (const auto& p : partial) total += p;
  return total;
}

void check_count_size(int n) {
  if (n < 0 || n > kMaxCountSize) {
    throw std::invalid_argument("n = " + std::to_string(n) + " outside 0.." + std::to_string(kMaxCountSize));
  }
}

}  // namespace

std::uint64_t count_2boolean(int n, int threads) {
  check_count_size(n);
  if (n == 0) return 1;
  return scan_symmetric_group<std::uint64_t>(n, threads, [](const Permutation& w, std::uint64_t& acc) {
    acc += is_2boolean_patterns(w);
  });
}

std::vector<BigInt> gf_coefficients(int N) {
  if (N < 0) return {};
  const BigInt seeds[] = {1, 1, 2, 6, 21};
  std::vector<BigInt> f;
  for (int n = 0; n <= N; ++n) {
    if (n < 5) f.push_back(seeds[n]);
    else f.push_back(6 * f[n - 1] - 9 * f[n - 2] + 3 * f[n - 3]);
  }
  return f;
}

std::vector<BigInt> gf_series_division(int N) {
  if (N < 0) return {};
  const std::vector<BigInt> num{1, -5, 5};
  const std::vector<BigInt> den{1, -6, 9, -3};
  std::vector<BigInt> c;
  for (int n = 0; n <= N; ++n) {
    BigInt v = n < static_cast<int>(num.size()) ? num[n] : BigInt(0);
    for (int j = 1; j < static_cast<int>(den.size()) && j <= n; ++j) v -= den[j] * c[n - j];
    c.push_back(v / den[0]);
  }
  return c;
}

namespace {

struct RefinedAcc {
  std::uint64_t f0 = 0, f1 = 0, f00 = 0, f01 = 0, f11 = 0, both_large = 0;
  RefinedAcc& operator+=(const RefinedAcc& o) {
    f0 += o.f0;
    f1 += o.f1;
    f00 += o.f00;
    f01 += o.f01;
    f11 += o.f11;
    both_large += o.both_large;
    return *this;
  }
};

}  // namespace

RefinedCounts refined_counts(int n, int threads) {
  check_count_size(n);
  if (n < 2) throw std::invalid_argument("refined counts need n >= 2");
  auto acc = scan_symmetric_group<RefinedAcc>(n, threads, [](const Permutation& w, RefinedAcc& a) {
    if (w(1) == 1 || !is_2boolean_patterns(w)) return;
    const auto s = abc_stats(w);
    a.f0 += s.a == 0;
    a.f1 += s.a == 1;
    a.f00 += s.a == 0 && s.b == 0;
    a.f01 += s.a == 0 && s.b == 1;
    a.f11 += s.a == 1 && s.b == 1;
    a.both_large += s.a >= 2 && s.b >= 2;
  });
  std::vector<std::int64_t> f;
  for (int k = 0; k < n; ++k) f.push_back(static_cast<std::int64_t>(count_2boolean(k, threads)));
  RefinedCounts r;
  r.n = n;
  r.f0 = acc.f0;
  r.f1 = acc.f1;
  r.f00 = acc.f00;
  r.f01 = acc.f01;
  r.f11 = acc.f11;
  r.both_large = acc.both_large;
  for (int k = 1; k <= n - 1; ++k) r.rhs_f0 += f[k];
  r.rhs_f1 = f[n - 1] - f[n - 2];
  for (int k = 0; k <= n - 2; ++k) r.rhs_f00 += f[k];
  for (int k = 1; k <= n - 2; ++k) r.rhs_f01 += f[k];
  r.rhs_f11 = f[n - 2] - 1;
  return r;
}

}  // namespace weylbool
