#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "weylbool/root_system.hpp"

namespace weylbool::linalg {

using Row = std::vector<std::int64_t>;

// Fraction-free row reduction; rows are divided by their content after every
// step so entries stay small. Returns pivot columns; `rows` ends in reduced form.
inline std::vector<int> row_reduce(std::vector<Row>& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  auto normalize = [](Row& row) {
    std::int64_t g = 0;
    for (auto v : row) g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1)
      for (auto& v : row) v /= g;
  };
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::int64_t a = rows[r][c], b = rows[i][c];
      for (int k = 0; k < ncols; ++k) rows[i][k] = rows[i][k] * a - rows[r][k] * b;
      normalize(rows[i]);
    }
    normalize(rows[r]);
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline int rank_of(std::vector<Row> rows, int ncols) {
  return static_cast<int>(row_reduce(rows, ncols).size());
}

// Integer basis of {x : row . x = 0 for every row}.
inline std::vector<Row> nullspace(std::vector<Row> rows, int ncols) {
  auto pivots = row_reduce(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::int64_t l = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) l = std::lcm(l, rows[i][pivots[i]]);
  std::vector<Row> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Row x(ncols, 0);
    x[f] = l;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      x[pivots[i]] = -rows[i][f] * (l / rows[i][pivots[i]]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

inline Row to_row(const Root& r) {
  Row row(r.rank());
  for (int i = 0; i < r.rank(); ++i) row[i] = r[i];
  return row;
}

// Membership test for span(generators) through its orthogonal complement.
class SpanTest {
 public:
  SpanTest(std::span<const Root> generators, int rank) : rank_(rank) {
    std::vector<Row> rows;
    for (const auto& g : generators) rows.push_back(to_row(g));
    dim_ = rank_of(rows, rank);
    complement_ = nullspace(std::move(rows), rank);
  }
  int dimension() const { return dim_; }
  bool contains(const Root& v) const {
    for (const auto& n : complement_) {
      std::int64_t s = 0;
      for (int i = 0; i < rank_; ++i) s += n[i] * v[i];
      if (s != 0) return false;
    }
    return true;
  }

 private:
  int rank_;
  int dim_ = 0;
  std::vector<Row> complement_;
};

}  // namespace weylbool::linalg
