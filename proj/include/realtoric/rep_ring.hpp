#pragma once

// The ring of symmetric-group representations under induction product,
// worked in the Schur (irreducible) basis. The character side below exists
// as an independent check on the Pieri arithmetic.

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"

namespace realtoric {

/// Rational combination of irreducible classes s_lambda, lambda a partition of n.
class SchurVector {
 public:
  using Terms = std::map<Partition, Rational, ReverseLex>;

  explicit SchurVector(int n = 0) : n_(n) {
    if (n < 0) throw std::invalid_argument("SchurVector degree must be nonnegative");
  }

  static SchurVector basis(const Partition& lambda, Rational c = 1) {
    SchurVector v(lambda.size());
    v.add(lambda, std::move(c));
    return v;
  }
  /// Unit of the ring: the trivial module of S_0.
  static SchurVector one() { return basis(Partition{}); }
  /// Trivial module of S_k.
  static SchurVector h(int k) { return basis(Partition::row(k)); }
  /// Sign module of S_k.
  static SchurVector e(int k) { return basis(Partition::column(k)); }

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Partition& lambda, const Rational& c) {
    if (lambda.size() != n_)
      throw std::invalid_argument("partition " + lambda.str() + " does not have size " +
                                  std::to_string(n_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SchurVector& operator+=(const SchurVector& o) {
    check_degree(o);
    for (const auto& [lambda, c] : o.terms_) add(lambda, c);
    return *this;
  }
  SchurVector& operator-=(const SchurVector& o) {
    check_degree(o);
    for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
    return *this;
  }
  SchurVector& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [lambda, c] : terms_) c *= s;
    return *this;
  }

  friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
  friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
  friend SchurVector operator-(SchurVector a) { return a *= Rational(-1); }
  friend SchurVector operator*(const Rational& s, SchurVector a) { return a *= s; }
  friend bool operator==(const SchurVector& a, const SchurVector& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Sum of coefficient times dim V_lambda.
  Rational dimension() const {
    Rational d = 0;
    for (const auto& [lambda, c] : terms_) d += c * Rational(hook_dimension(lambda));
    return d;
  }

  bool is_integral() const {
    for (const auto& [lambda, c] : terms_)
      if (!realtoric::is_integral(c)) return false;
    return true;
  }

  /// True when this is the class of an honest module.
  bool is_effective() const {
    for (const auto& [lambda, c] : terms_)
      if (c < 0 || !realtoric::is_integral(c)) return false;
    return true;
  }

  /// If this is c * s_lambda for a single lambda, returns it.
  std::optional<std::pair<Partition, Rational>> single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lambda, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += format_rational(c) + "*";
      s += "s" + lambda.str();
    }
    return s;
  }

 private:
  void check_degree(const SchurVector& o) const {
    if (o.n_ != n_)
      throw std::invalid_argument("SchurVector degree mismatch: " + std::to_string(n_) + " vs " +
                                  std::to_string(o.n_));
  }

  int n_;
  Terms terms_;
};

namespace detail {

/// Partitions mu with mu/lambda a horizontal k-strip:
/// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
inline void horizontal_strips(const Partition& lambda, int k,
                              const std::function<void(const Partition&)>& emit) {
  const int rows = lambda.length() + 1;
  std::vector<int> mu(rows, 0);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == rows) {
      if (left != 0) return;
      std::vector<int> parts;
      for (int p : mu)
        if (p > 0) parts.push_back(p);
      emit(Partition(std::move(parts)));
      return;
    }
    const int lo = lambda[row];
    const int hi = row == 0 ? lo + left : std::min(lambda[row - 1], lo + left);
    for (int v = lo; v <= hi; ++v) {
      mu[row] = v;
      rec(row + 1, left - (v - lo));
    }
  };
  rec(0, k);
}

/// Partitions mu with mu/lambda a vertical k-strip: each row grows by at most one.
inline void vertical_strips(const Partition& lambda, int k,
                            const std::function<void(const Partition&)>& emit) {
  const int rows = lambda.length() + k;
  std::vector<int> mu(rows, 0);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == rows) {
      if (left != 0) return;
      std::vector<int> parts;
      for (int p : mu)
        if (p > 0) parts.push_back(p);
      emit(Partition(std::move(parts)));
      return;
    }
    for (int grow = 0; grow <= std::min(1, left); ++grow) {
      const int v = lambda[row] + grow;
      if (row > 0 && v > mu[row - 1]) continue;
      mu[row] = v;
      rec(row + 1, left - grow);
    }
  };
  rec(0, k);
}

}  // namespace detail

/// v * h_k: add horizontal strips of size k.
inline SchurVector pieri_h(const SchurVector& v, int k) {
  if (k < 0) throw std::invalid_argument("pieri_h: k must be nonnegative");
  SchurVector out(v.degree() + k);
  for (const auto& [lambda, c] : v.terms())
    detail::horizontal_strips(lambda, k, [&](const Partition& mu) { out.add(mu, c); });
  return out;
}

/// v * e_k: add vertical strips of size k.
inline SchurVector pieri_e(const SchurVector& v, int k) {
  if (k < 0) throw std::invalid_argument("pieri_e: k must be nonnegative");
  SchurVector out(v.degree() + k);
  for (const auto& [lambda, c] : v.terms())
    detail::vertical_strips(lambda, k, [&](const Partition& mu) { out.add(mu, c); });
  return out;
}

/// Tensoring with the sign character: s_lambda -> s_lambda'.
inline SchurVector omega(const SchurVector& v) {
  SchurVector out(v.degree());
  for (const auto& [lambda, c] : v.terms()) out.add(conjugate(lambda), c);
  return out;
}

/// Restriction from S_n to S_{n-1}: remove one corner box.
inline SchurVector restrict(const SchurVector& v) {
  if (v.degree() < 1) throw std::invalid_argument("restrict: degree must be at least 1");
  SchurVector out(v.degree() - 1);
  for (const auto& [lambda, c] : v.terms()) {
    for (int r = 0; r < lambda.length(); ++r) {
      if (lambda[r] == lambda[r + 1]) continue;
      std::vector<int> parts = lambda.parts();
      if (--parts[r] == 0) parts.pop_back();
      out.add(Partition(std::move(parts)), c);
    }
  }
  return out;
}

namespace detail {

inline SchurVector h_monomial(const SchurVector& v, const Partition& lambda) {
  SchurVector out = v;
  for (int part : lambda.parts()) out = pieri_h(out, part);
  return out;
}

/// s_nu written in the complete homogeneous basis {h_lambda}. Uses
/// h_nu = s_nu + sum over lexicographically larger mu of K_{mu,nu} s_mu.
inline std::map<Partition, Rational> h_expansion(
    const Partition& nu, std::map<Partition, std::map<Partition, Rational>>& memo) {
  if (auto it = memo.find(nu); it != memo.end()) return it->second;
  std::map<Partition, Rational> out{{nu, Rational(1)}};
  const SchurVector h_nu = h_monomial(SchurVector::one(), nu);
  for (const auto& [mu, kostka] : h_nu.terms()) {
    if (mu == nu) continue;
    for (const auto& [lambda, c] : h_expansion(mu, memo)) {
      Rational& slot = out[lambda];
      slot -= kostka * c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  memo.emplace(nu, out);
  return out;
}

}  // namespace detail

/// Induction product of two classes. Dispatches to a single Pieri step when
/// either factor is a multiple of h_k or e_k; otherwise expands the second
/// factor in h-monomials and iterates Pieri (correct but slow).
inline SchurVector product(const SchurVector& a, const SchurVector& b) {
  auto pieri_single = [](const SchurVector& v,
                         const SchurVector& factor) -> std::optional<SchurVector> {
    auto single = factor.single_term();
    if (!single) return std::nullopt;
    const auto& [lambda, c] = *single;
    if (lambda.length() <= 1) return c * pieri_h(v, lambda.size());
    if (lambda[0] == 1) return c * pieri_e(v, lambda.size());
    return std::nullopt;
  };
  if (a.is_zero() || b.is_zero()) return SchurVector(a.degree() + b.degree());
  if (auto r = pieri_single(a, b)) return *r;
  if (auto r = pieri_single(b, a)) return *r;

  std::map<Partition, std::map<Partition, Rational>> memo;
  std::map<Partition, SchurVector> a_times_h;
  SchurVector out(a.degree() + b.degree());
  for (const auto& [nu, c] : b.terms()) {
    for (const auto& [lambda, d] : detail::h_expansion(nu, memo)) {
      auto it = a_times_h.find(lambda);
      if (it == a_times_h.end())
        it = a_times_h.emplace(lambda, detail::h_monomial(a, lambda)).first;
      out += (c * d) * it->second;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characters

namespace detail {

inline Integer mn_character_uncached(const Partition& lambda, const Partition& mu);

inline Integer mn_character_cached(const Partition& lambda, const Partition& mu) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, Integer> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({lambda, mu}); it != cache.end()) return it->second;
  }
  Integer value = mn_character_uncached(lambda, mu);
  std::lock_guard lock(mutex);
  cache.emplace(std::pair{lambda, mu}, value);
  return value;
}

/// Murnaghan-Nakayama on beta numbers: removing a rim hook of length r moves
/// a bead from b to b-r; the sign counts the beads jumped over.
inline Integer mn_character_uncached(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  const int r = mu[0];
  const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const int len = lambda.length();
  std::set<int> beads;
  for (int k = 0; k < len; ++k) beads.insert(lambda[k] + (len - 1 - k));

  Integer total = 0;
  for (int b : beads) {
    const int target = b - r;
    if (target < 0 || beads.count(target)) continue;
    int jumped = 0;
    for (int x : beads)
      if (x > target && x < b) ++jumped;
    std::set<int> moved = beads;
    moved.erase(b);
    moved.insert(target);
    std::vector<int> parts;
    int idx = len - 1;
    for (auto it = moved.rbegin(); it != moved.rend(); ++it, --idx) {
      const int part = *it - idx;
      if (part > 0) parts.push_back(part);
    }
    const Integer chi = mn_character_cached(Partition(std::move(parts)), rest);
    total += (jumped % 2 == 0) ? chi : Integer(-chi);
  }
  return total;
}

}  // namespace detail

/// Irreducible character chi^lambda evaluated on the class mu.
inline Integer mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: " + lambda.str() + " and " + mu.partition.str() +
                                " have different sizes");
  return detail::mn_character_cached(lambda, mu.partition);
}

/// Sign of a permutation of cycle type mu.
inline int sign_of(const CycleType& mu) {
  return (mu.size() - mu.partition.length()) % 2 == 0 ? 1 : -1;
}

/// Rational-valued class function on S_n, keyed by cycle type.
class ClassFunction {
 public:
  explicit ClassFunction(int n = 0) : n_(n) {}

  int degree() const { return n_; }

  Rational operator()(const CycleType& mu) const {
    auto it = values_.find(mu);
    return it == values_.end() ? Rational(0) : it->second;
  }

  void set(const CycleType& mu, Rational value) {
    if (mu.size() != n_) throw std::invalid_argument("class function degree mismatch");
    if (value == 0)
      values_.erase(mu);
    else
      values_[mu] = std::move(value);
  }

  const std::map<CycleType, Rational>& values() const { return values_; }

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_;
  std::map<CycleType, Rational> values_;
};

inline std::vector<CycleType> cycle_types_of(int n) {
  std::vector<CycleType> out;
  for (auto& p : partitions_of(n)) out.push_back(CycleType{std::move(p)});
  return out;
}

/// <f, g> = sum over classes of f(mu) g(mu) / z_mu.
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("inner_product: degree mismatch");
  Rational acc = 0;
  for (const auto& [mu, value] : f.values())
    acc += value * g(mu) / Rational(class_data(mu).centralizer_order);
  return acc;
}

inline ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction f(lambda.size());
  for (const auto& mu : cycle_types_of(lambda.size()))
    f.set(mu, Rational(mn_character(lambda, mu)));
  return f;
}

inline ClassFunction to_class_function(const SchurVector& v) {
  ClassFunction f(v.degree());
  for (const auto& mu : cycle_types_of(v.degree())) {
    Rational value = 0;
    for (const auto& [lambda, c] : v.terms()) value += c * Rational(mn_character(lambda, mu));
    f.set(mu, std::move(value));
  }
  return f;
}

struct Decomposition {
  SchurVector schur;
  /// False when some multiplicity is not an integer, i.e. the input is not
  /// a virtual character.
  bool integral;
};

inline Decomposition decompose(const ClassFunction& f) {
  SchurVector v(f.degree());
  for (const auto& lambda : partitions_of(f.degree()))
    v.add(lambda, inner_product(f, irreducible_character(lambda)));
  const bool integral = v.is_integral();
  return {std::move(v), integral};
}

// ---------------------------------------------------------------------------
// Truncated series in R[t]

/// Element of the completed representation ring with an extra variable t,
/// truncated above degree N in the S_n grading.
class RepSeries {
 public:
  using Key = std::pair<int, int>;  // (n, power of t)

  explicit RepSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) throw std::invalid_argument("RepSeries truncation must be nonnegative");
  }

  static RepSeries one(int truncation) {
    RepSeries s(truncation);
    s.add_term(0, 0, SchurVector::one());
    return s;
  }

  int truncation() const { return truncation_; }
  const std::map<Key, SchurVector>& terms() const { return terms_; }

  /// Adds v * t^t_power in degree v.degree(); silently drops terms above the truncation.
  void add_term(int n, int t_power, const SchurVector& v) {
    if (v.degree() != n) throw std::invalid_argument("RepSeries term degree mismatch");
    if (t_power < 0) throw std::invalid_argument("RepSeries: negative power of t");
    if (n > truncation_ || v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{n, t_power}, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SchurVector term(int n, int t_power) const {
    auto it = terms_.find({n, t_power});
    return it == terms_.end() ? SchurVector(n) : it->second;
  }

  /// Coefficients of t^p in degree n.
  std::map<int, SchurVector> t_polynomial(int n) const {
    std::map<int, SchurVector> out;
    for (auto it = terms_.lower_bound({n, 0}); it != terms_.end() && it->first.first == n; ++it)
      out.emplace(it->first.second, it->second);
    return out;
  }

  friend RepSeries operator+(const RepSeries& a, const RepSeries& b) {
    RepSeries out(std::min(a.truncation_, b.truncation_));
    for (const auto& [k, v] : a.terms_) out.add_term(k.first, k.second, v);
    for (const auto& [k, v] : b.terms_) out.add_term(k.first, k.second, v);
    return out;
  }

  friend RepSeries operator*(const RepSeries& a, const RepSeries& b) {
    RepSeries out(std::min(a.truncation_, b.truncation_));
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        if (ka.first + kb.first > out.truncation_) continue;
        out.add_term(ka.first + kb.first, ka.second + kb.second, product(va, vb));
      }
    return out;
  }

  friend bool operator==(const RepSeries& a, const RepSeries& b) {
    return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }

  /// Multiplicative inverse up to the truncation; the degree-0 part must be exactly 1.
  RepSeries inverse() const {
    const auto constant = t_polynomial(0);
    if (constant.size() != 1 || !constant.count(0) || constant.at(0) != SchurVector::one())
      throw std::domain_error("RepSeries inverse: constant term must be 1");
    RepSeries out = one(truncation_);
    for (int n = 1; n <= truncation_; ++n) {
      for (int k = 1; k <= n; ++k) {
        for (const auto& [p, a] : t_polynomial(k))
          for (const auto& [q, b] : out.t_polynomial(n - k))
            out.add_term(n, p + q, -product(a, b));
      }
    }
    return out;
  }

 private:
  int truncation_;
  std::map<Key, SchurVector> terms_;
};

inline RepSeries series_multiply(const RepSeries& a, const RepSeries& b) { return a * b; }
inline RepSeries series_invert(const RepSeries& a) { return a.inverse(); }

}  // namespace realtoric
