#pragma once

// Homology of open intervals (empty, I) in the poset of even-size subsets,
// computed from the order complex. Degrees follow the shifted convention
// m = (simplicial degree) + 2, so H_m(empty, I) is reduced homology in
// degree m - 2 and the empty chain sits in m = 1.

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact_rank.hpp"
#include "rep_ring.hpp"

namespace realtoric {

/// Largest top-element size for which the order complex is built by default.
inline constexpr int kDefaultPosetBound = 8;
/// Hard ceiling on any bound override.
inline constexpr int kMaxPosetBound = 10;

/// Strict chain J_0 < J_1 < ... < J_d, ordered by inclusion.
using PosetChain = std::vector<Subset>;

/// The open interval (empty, [n]) of even subsets, n even.
class EvenInterval {
 public:
  explicit EvenInterval(int top_size) : top_size_(top_size) {
    if (top_size < 0 || top_size % 2 != 0)
      throw std::invalid_argument("even interval top size must be even and nonnegative, got " +
                                  std::to_string(top_size));
    if (top_size > kMaxGround) throw std::invalid_argument("even interval top size too large");
    const Subset top = full_set(top_size);
    for (Subset s = 1; s < top; ++s)
      if (subset_size(s) % 2 == 0) elements_.push_back(s);
    std::stable_sort(elements_.begin(), elements_.end(),
                     [](Subset a, Subset b) { return subset_size(a) < subset_size(b); });
  }

  int top_size() const { return top_size_; }
  /// Rank of an element is half its size.
  static int rank(Subset s) { return subset_size(s) / 2; }
  const std::vector<Subset>& elements() const { return elements_; }

 private:
  int top_size_;
  std::vector<Subset> elements_;
};

/// Order complex of an open interval, with the empty chain included in
/// dimension -1 so that homology comes out reduced.
class IntervalComplex {
 public:
  explicit IntervalComplex(const EvenInterval& interval) : top_size_(interval.top_size()) {
    simplices_.push_back({PosetChain{}});
    while (true) {
      std::vector<PosetChain> next;
      for (const auto& chain : simplices_.back())
        for (Subset v : interval.elements()) {
          if (!chain.empty() && !(is_subset(chain.back(), v) && chain.back() != v)) continue;
          PosetChain longer = chain;
          longer.push_back(v);
          next.push_back(std::move(longer));
        }
      if (next.empty()) break;
      simplices_.push_back(std::move(next));
    }
    index_.resize(simplices_.size());
    for (std::size_t k = 0; k < simplices_.size(); ++k)
      for (std::size_t j = 0; j < simplices_[k].size(); ++j)
        index_[k].emplace(simplices_[k][j], static_cast<int>(j));
  }

  int top_size() const { return top_size_; }
  /// Highest simplicial dimension present.
  int top_dimension() const { return static_cast<int>(simplices_.size()) - 2; }

  const std::vector<PosetChain>& simplices(int dim) const { return simplices_.at(dim + 1); }
  std::size_t count(int dim) const {
    return dim < -1 || dim > top_dimension() ? 0 : simplices(dim).size();
  }

  /// Rows of the boundary map C_dim -> C_{dim-1}: one row per dim-simplex,
  /// alternating-sign face deletion. Dimension 0 maps onto the empty chain.
  std::vector<SparseRow> boundary_rows(int dim) const {
    std::vector<SparseRow> rows;
    if (dim < 0 || dim > top_dimension()) return rows;
    const auto& faces = index_.at(dim);
    for (const auto& chain : simplices(dim)) {
      SparseRow row;
      for (std::size_t k = 0; k < chain.size(); ++k) {
        PosetChain face = chain;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        row.emplace_back(faces.at(face), k % 2 == 0 ? Integer(1) : Integer(-1));
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
    return rows;
  }

  /// Number of dim-simplices fixed (as sets of vertices) by the permutation w.
  std::size_t fixed_count(int dim, const std::vector<int>& w) const {
    std::size_t fixed = 0;
    for (const auto& chain : simplices(dim)) {
      bool ok = true;
      for (Subset s : chain)
        if (permute_subset(s, w) != s) {
          ok = false;
          break;
        }
      if (ok) ++fixed;
    }
    return fixed;
  }

  static Subset permute_subset(Subset s, const std::vector<int>& w) {
    Subset out = 0;
    for (int k = 0; s != 0; ++k, s >>= 1)
      if (s & 1u) out |= Subset{1} << w[k];
    return out;
  }

 private:
  int top_size_;
  std::vector<std::vector<PosetChain>> simplices_;
  std::vector<std::map<PosetChain, int>> index_;
};

/// Checks d o d = 0 on every degree by composing the sparse boundary maps.
inline bool boundary_squares_to_zero(const IntervalComplex& complex) {
  for (int dim = 1; dim <= complex.top_dimension(); ++dim) {
    const auto upper = complex.boundary_rows(dim);
    const auto lower = complex.boundary_rows(dim - 1);
    for (const auto& row : upper) {
      std::map<int, Integer> acc;
      for (const auto& [face, c] : row)
        for (const auto& [col, d] : lower[face]) acc[col] += c * d;
      for (const auto& [col, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

inline void check_poset_bound(int top_size, int bound) {
  if (bound < 0 || bound > kMaxPosetBound)
    throw std::out_of_range("poset bound must lie in [0," + std::to_string(kMaxPosetBound) + "]");
  if (top_size > bound)
    throw std::out_of_range("interval top size " + std::to_string(top_size) +
                            " exceeds the brute-force bound " + std::to_string(bound));
}

/// Ranks of H_m(empty, I) for |I| = top_size, for every m the complex reaches.
inline std::map<int, std::size_t> homology_ranks(int top_size, int bound = kDefaultPosetBound) {
  if (top_size < 0 || top_size % 2 != 0)
    throw std::invalid_argument("homology_ranks: interval size must be even, got " +
                                std::to_string(top_size));
  check_poset_bound(top_size, bound);
  if (top_size == 0) return {{0, 1}};

  const IntervalComplex complex{EvenInterval(top_size)};
  const int top = complex.top_dimension();
  std::vector<std::size_t> boundary_rank(top + 3, 0);  // index dim+1
  for (int dim = 0; dim <= top; ++dim)
    boundary_rank[dim + 1] = exact_rank(complex.boundary_rows(dim));
  std::map<int, std::size_t> ranks;
  for (int dim = -1; dim <= top; ++dim)
    ranks[dim + 2] = complex.count(dim) - boundary_rank[dim + 1] - boundary_rank[dim + 2];
  return ranks;
}

/// Euler characteristic of the augmented chain complex, sum (-1)^dim |C_dim|.
inline long long reduced_euler_characteristic(const IntervalComplex& complex) {
  long long chi = 0;
  for (int dim = -1; dim <= complex.top_dimension(); ++dim)
    chi += (dim % 2 == 0 ? 1 : -1) * static_cast<long long>(complex.count(dim));
  return chi;
}

/// True iff the homology of (empty, [n]) lives only in degree n/2.
/// Results are cached per n; computing n = 8 takes a few seconds.
inline bool cm_concentration_check(int n, int bound = kDefaultPosetBound) {
  static std::mutex mutex;
  static std::map<int, bool> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) {
      check_poset_bound(n, bound);
      return it->second;
    }
  }
  bool concentrated = true;
  for (const auto& [m, rank] : homology_ranks(n, bound))
    if (m != n / 2 && rank != 0) concentrated = false;
  std::lock_guard lock(mutex);
  cache.emplace(n, concentrated);
  return concentrated;
}

/// Character of S_n on the top homology H_{n/2}(empty, [n]) via the Hopf
/// trace formula: with homology concentrated in simplicial degree D,
/// (-1)^D chi(g) = sum_d (-1)^d #{d-chains fixed by g}.
inline ClassFunction equivariant_top_character(int n, int bound = kDefaultPosetBound) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("equivariant_top_character: n must be even, got " +
                                std::to_string(n));
  check_poset_bound(n, bound);
  ClassFunction chi(n);
  if (n == 0) {
    chi.set(CycleType{Partition{}}, 1);
    return chi;
  }
  if (!cm_concentration_check(n, bound))
    throw std::logic_error("homology of the even interval of size " + std::to_string(n) +
                           " is not concentrated in its top degree; trace formula invalid");

  const IntervalComplex complex{EvenInterval(n)};
  const int top_dim = n / 2 - 2;
  for (const auto& mu : cycle_types_of(n)) {
    const auto w = class_representative(mu);
    long long lefschetz = 0;
    for (int dim = -1; dim <= complex.top_dimension(); ++dim)
      lefschetz += (dim % 2 == 0 ? 1 : -1) * static_cast<long long>(complex.fixed_count(dim, w));
    chi.set(mu, Rational(top_dim % 2 == 0 ? lefschetz : -lefschetz));
  }
  return chi;
}

/// Top homology of (empty, [n]) as a SchurVector.
inline SchurVector top_homology_rep(int n, int bound = kDefaultPosetBound) {
  auto d = decompose(equivariant_top_character(n, bound));
  if (!d.integral)
    throw std::logic_error("top homology character of size " + std::to_string(n) +
                           " has non-integral multiplicities");
  return d.schur;
}

/// WH_i(B_n^ev): the rank-i interval homologies, induced up from S_{2i} x S_{n-2i}.
inline SchurVector whitney_homology(int n, int i, int bound = kDefaultPosetBound) {
  if (i < 0 || 2 * i > n)
    throw std::invalid_argument("whitney_homology: need 0 <= 2i <= n");
  return pieri_h(top_homology_rep(2 * i, bound), n - 2 * i);
}

/// Outcome of a degreewise identity check; names the first mismatch.
struct Verification {
  bool passed = true;
  int n = -1;
  int i = -1;
  std::string detail;

  explicit operator bool() const { return passed; }

  static Verification failure(int n, int i, std::string detail) {
    return {false, n, i, std::move(detail)};
  }
};

/// Compares two series degree by degree; the t-power is reported as i.
inline Verification compare_series(const RepSeries& lhs, const RepSeries& rhs) {
  const int top = std::min(lhs.truncation(), rhs.truncation());
  for (int n = 0; n <= top; ++n) {
    const auto a = lhs.t_polynomial(n);
    const auto b = rhs.t_polynomial(n);
    std::set<int> powers;
    for (const auto& [p, v] : a) powers.insert(p);
    for (const auto& [p, v] : b) powers.insert(p);
    for (int p : powers) {
      const SchurVector va = a.count(p) ? a.at(p) : SchurVector(n);
      const SchurVector vb = b.count(p) ? b.at(p) : SchurVector(n);
      if (va != vb) return Verification::failure(n, p, "left " + va.str() + " != right " + vb.str());
    }
  }
  return {};
}

/// 1 + sum_{n even} (-1)^{n/2} H_{n/2}(empty,[n]) against (1 + sum_{n even} h_n)^{-1},
/// through degree max_degree.
inline Verification verify_schprop(int max_degree, int bound = kDefaultPosetBound) {
  if (max_degree < 0) throw std::invalid_argument("verify_schprop: degree must be nonnegative");
  check_poset_bound(max_degree - max_degree % 2, bound);
  RepSeries lhs = RepSeries::one(max_degree);
  RepSeries denominator = RepSeries::one(max_degree);
  for (int n = 2; n <= max_degree; n += 2) {
    SchurVector top = top_homology_rep(n, bound);
    lhs.add_term(n, 0, (n / 2) % 2 == 0 ? top : -top);
    denominator.add_term(n, 0, SchurVector::h(n));
  }
  return compare_series(lhs, series_invert(denominator));
}

}  // namespace realtoric
