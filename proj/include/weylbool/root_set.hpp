#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace weylbool {

/// Set of positive-root indices of one root system (at most 128 roots; E8 has 120).
class RootSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr RootSet() = default;

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(int i, bool v) { v ? set(i) : reset(i); }

  int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  bool empty() const { return (words_[0] | words_[1]) == 0; }

  RootSet operator&(const RootSet& o) const {
    RootSet r;
    r.words_ = {words_[0] & o.words_[0], words_[1] & o.words_[1]};
    return r;
  }
  RootSet operator|(const RootSet& o) const {
    RootSet r;
    r.words_ = {words_[0] | o.words_[0], words_[1] | o.words_[1]};
    return r;
  }
  bool is_subset_of(const RootSet& o) const { return ((*this) & o) == *this; }

  // Calls f(index) for each member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9E3779B97F4A7C15ull ^ words_[1]);
  }

  friend bool operator==(const RootSet&, const RootSet&) = default;
  friend bool operator<(const RootSet& a, const RootSet& b) {
    return a.words_[1] != b.words_[1] ? a.words_[1] < b.words_[1] : a.words_[0] < b.words_[0];
  }

 private:
  std::array<std::uint64_t, 2> words_{};
};

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const { return s.hash(); }
};

}  // namespace weylbool
