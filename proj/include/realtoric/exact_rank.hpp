#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"

namespace realtoric {

/// Sparse integer row: (column, nonzero value), columns strictly increasing.
using SparseRow = std::vector<std::pair<int, Integer>>;

namespace detail {

inline void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [col, v] : row) v /= g;
}

/// Returns lead_p * row - lead_r * pivot, which cancels the leading column.
inline SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
  const Integer& a = pivot.front().second;
  const Integer& b = row.front().second;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      Integer v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace detail

/// Rank over Q of the span of the given integer rows, by fraction-free
/// elimination into echelon form keyed on leading column. Rows are made
/// primitive after each step so entries stay small.
inline std::size_t exact_rank(std::vector<SparseRow> rows) {
  // Short rows first: they make sparse pivots.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  std::unordered_map<int, SparseRow> pivots;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::erase_if(row, [](const auto& x) { return x.second == 0; });
    detail::make_primitive(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = detail::eliminate(row, it->second);
    }
  }
  return pivots.size();
}

}  // namespace realtoric
