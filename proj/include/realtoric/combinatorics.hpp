#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace realtoric {

/// Integer partition: weakly decreasing positive parts. Indexes both the
/// irreducible representations and the conjugacy classes of S_n.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
      size_ += parts_[k];
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Single row (k).
  static Partition row(int k) { return k == 0 ? Partition{} : Partition(std::vector<int>{k}); }
  /// Single column (1^k).
  static Partition column(int k) { return Partition(std::vector<int>(k, 1)); }

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }

  /// Multiplicity of part i.
  int multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(parts_[k]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical ordering of partitions of a fixed n: reverse lexicographic,
/// so (n) comes first and (1^n) last.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int col = 1; col <= lambda[0]; ++col) {
    int height = 0;
    while (height < lambda.length() && lambda[height] >= col) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

/// Number of standard Young tableaux, by the hook length formula.
inline Integer hook_dimension(const Partition& lambda) {
  Integer hooks = 1;
  const Partition conj = conjugate(lambda);
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) hooks *= (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

/// A conjugacy class of S_n, labelled by its cycle lengths.
struct CycleType {
  Partition partition;

  int size() const { return partition.size(); }
  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.partition <=> b.partition;
  }
};

struct ClassData {
  Integer centralizer_order;
  Integer class_size;
};

/// z_mu = prod i^{m_i} m_i! and the class size n!/z_mu.
inline ClassData class_data(const CycleType& mu) {
  Integer z = 1;
  const auto& parts = mu.partition.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t run = k;
    while (run < parts.size() && parts[run] == parts[k]) ++run;
    const int mult = static_cast<int>(run - k);
    for (int j = 0; j < mult; ++j) z *= parts[k];
    z *= factorial(mult);
    k = run;
  }
  return {z, factorial(mu.size()) / z};
}

/// A permutation of [n] whose cycle lengths are mu, written 0-based as
/// w[i] = image of i. Cycles occupy consecutive labels.
inline std::vector<int> class_representative(const CycleType& mu) {
  std::vector<int> w(mu.size());
  int start = 0;
  for (int len : mu.partition.parts()) {
    for (int k = 0; k < len; ++k) w[start + k] = start + (k + 1) % len;
    start += len;
  }
  return w;
}

/// Euler secant numbers A_0, A_2, ..., A_{max_index}, from exact division
/// of 1 by the cosine series.
inline std::vector<Integer> secant_numbers(int max_index) {
  if (max_index < 0 || max_index % 2 != 0)
    throw std::invalid_argument("secant_numbers: max_index must be even and nonnegative");
  std::vector<Rational> cosine(max_index + 1), quotient(max_index + 1);
  for (int k = 0; k <= max_index; k += 2)
    cosine[k] = Rational((k / 2) % 2 == 0 ? 1 : -1) / Rational(factorial(k));
  quotient[0] = 1;
  for (int k = 1; k <= max_index; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += cosine[j] * quotient[k - j];
    quotient[k] = -acc;
  }
  std::vector<Integer> out;
  for (int k = 0; k <= max_index; k += 2) {
    Rational scaled = quotient[k] * Rational(factorial(k));
    out.push_back(boost::multiprecision::numerator(scaled));
  }
  return out;
}

inline Integer secant_number(int index) { return secant_numbers(index).back(); }

/// Strictly descending chain [n] = K_1 > K_2 > ... > K_{m+1} = {}.
class SubsetChain {
 public:
  SubsetChain(int n, std::vector<Subset> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("chain ground set size out of range");
    if (blocks_.size() < 2) throw std::invalid_argument("chain needs at least two blocks");
    if (blocks_.front() != full_set(n)) throw std::invalid_argument("chain must start at [n]");
    if (blocks_.back() != 0) throw std::invalid_argument("chain must end at the empty set");
    for (std::size_t k = 1; k < blocks_.size(); ++k)
      if (!is_subset(blocks_[k], blocks_[k - 1]) || blocks_[k] == blocks_[k - 1])
        throw std::invalid_argument("chain inclusions must be strict");
  }

  int n() const { return n_; }
  /// Number of steps m; the chain has m+1 blocks.
  int steps() const { return static_cast<int>(blocks_.size()) - 1; }
  const std::vector<Subset>& blocks() const { return blocks_; }

  friend bool operator==(const SubsetChain&, const SubsetChain&) = default;
  friend auto operator<=>(const SubsetChain&, const SubsetChain&) = default;

 private:
  int n_;
  std::vector<Subset> blocks_;
};

/// All chains of subsets of [n] with exactly m+1 blocks.
inline std::vector<SubsetChain> enumerate_chains(int n, int m) {
  if (n < 1 || n > kMaxGround || m < 1 || m > n)
    throw std::invalid_argument("enumerate_chains: need 1 <= m <= n");
  std::vector<SubsetChain> out;
  std::vector<Subset> blocks{full_set(n)};
  std::function<void(int)> rec = [&](int remaining) {
    const Subset top = blocks.back();
    if (remaining == 1) {
      blocks.push_back(0);
      out.emplace_back(n, blocks);
      blocks.pop_back();
      return;
    }
    // The next block is a proper nonempty subset leaving room for the rest.
    for (Subset sub = (top - 1) & top; sub != 0; sub = (sub - 1) & top) {
      if (subset_size(sub) < remaining - 1) continue;
      blocks.push_back(sub);
      rec(remaining - 1);
      blocks.pop_back();
    }
  };
  rec(m);
  return out;
}

/// Number of chains of [n] with m+1 blocks, counted without enumerating:
/// chains from a k-set are determined by the next block's size.
inline Integer count_chains(int n, int m) {
  // c[k][j]: chains from a k-set down to {} in exactly j steps.
  std::vector<std::vector<Integer>> c(n + 1, std::vector<Integer>(m + 1, 0));
  c[0][0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= m; ++j)
      for (int next = 0; next < k; ++next) c[k][j] += binomial(k, next) * c[next][j - 1];
  return c[n][m];
}

}  // namespace realtoric
