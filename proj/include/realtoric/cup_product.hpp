#pragma once

// Degree-1 classes nu_ij and the span C of their cup products in degree 2.
// The model is the quotient of the graded-commutative algebra on the nu_ij
// by nu_ji = -nu_ij and nu_ij nu_ik = 0; products on disjoint pairs are
// taken as linearly independent.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wonderful_model.hpp"

namespace realtoric {

/// sign * nu_{i j} with 1 <= i < j (1-based labels).
class NuClass {
 public:
  NuClass(int a, int b) {
    if (a == b || a < 1 || b < 1) throw std::invalid_argument("nu class needs two distinct labels");
    i_ = std::min(a, b);
    j_ = std::max(a, b);
    sign_ = a < b ? 1 : -1;
  }

  int i() const { return i_; }
  int j() const { return j_; }
  int sign() const { return sign_; }
  std::pair<int, int> pair() const { return {i_, j_}; }

  NuClass negated() const {
    NuClass out = *this;
    out.sign_ = -sign_;
    return out;
  }

  friend bool operator==(const NuClass&, const NuClass&) = default;

 private:
  int i_ = 1, j_ = 2, sign_ = 1;
};

/// w . nu_ij = nu_{w(i) w(j)}.
inline NuClass sn_act_on_nu(const Permutation& w, const NuClass& nu) {
  if (nu.j() > w.size()) throw std::invalid_argument("sn_act_on_nu: label outside [n]");
  NuClass image(w(nu.i() - 1) + 1, w(nu.j() - 1) + 1);
  return nu.sign() == 1 ? image : image.negated();
}

/// Rational combination of nu_ab nu_cd on disjoint pairs, in normal form:
/// each pair increasing and the pair with the smaller first label first.
class DegreeTwoClass {
 public:
  using Term = std::pair<std::pair<int, int>, std::pair<int, int>>;

  void add(const Term& t, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  DegreeTwoClass& operator+=(const DegreeTwoClass& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  DegreeTwoClass& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }

  const std::map<Term, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const DegreeTwoClass&, const DegreeTwoClass&) = default;

 private:
  std::map<Term, Rational> terms_;
};

/// Reduces x * y: squares and products sharing a label vanish; swapping the
/// two degree-1 factors into normal order costs a sign.
inline DegreeTwoClass cup_reduce(const NuClass& x, const NuClass& y) {
  DegreeTwoClass out;
  if (x.i() == y.i() || x.i() == y.j() || x.j() == y.i() || x.j() == y.j()) return out;
  int sign = x.sign() * y.sign();
  auto first = x.pair(), second = y.pair();
  if (second.first < first.first) {
    std::swap(first, second);
    sign = -sign;
  }
  out.add({first, second}, sign);
  return out;
}

/// The three pairings of each 4-subset i<j<k<l: (ij,kl), (ik,jl), (il,jk).
inline std::vector<DegreeTwoClass::Term> degree_two_basis(int n) {
  std::vector<DegreeTwoClass::Term> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          basis.push_back({{i, j}, {k, l}});
          basis.push_back({{i, k}, {j, l}});
          basis.push_back({{i, l}, {j, k}});
        }
  return basis;
}

/// Extends the S_n action multiplicatively to degree 2.
inline DegreeTwoClass act(const Permutation& w, const DegreeTwoClass& x) {
  DegreeTwoClass out;
  for (const auto& [t, c] : x.terms()) {
    const NuClass a = sn_act_on_nu(w, NuClass(t.first.first, t.first.second));
    const NuClass b = sn_act_on_nu(w, NuClass(t.second.first, t.second.second));
    DegreeTwoClass image = cup_reduce(a, b);
    image *= c;
    out += image;
  }
  return out;
}

/// Dimension of the span of all products nu_ab nu_cd, a != b, c != d.
inline std::size_t cup_span_dimension(int n) {
  if (n < 2) throw std::invalid_argument("cup_span_dimension: n must be at least 2");
  std::map<DegreeTwoClass::Term, int> column;
  for (const auto& t : degree_two_basis(n)) column.emplace(t, static_cast<int>(column.size()));
  std::vector<SparseRow> rows;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          if (a == b || c == d) continue;
          const DegreeTwoClass prod = cup_reduce(NuClass(a, b), NuClass(c, d));
          SparseRow row;
          for (const auto& [t, coeff] : prod.terms())
            row.emplace_back(column.at(t), boost::multiprecision::numerator(coeff));
          if (!row.empty()) rows.push_back(std::move(row));
        }
  return exact_rank(std::move(rows));
}

/// C as an S_n-module by the Pieri rule: Ind_{S_4 x S_{n-4}}(V_(2,1,1) x 1).
inline SchurVector C_as_rep(int n) {
  if (n < 4) throw std::invalid_argument("C_as_rep: n must be at least 4");
  return pieri_h(SchurVector::basis({2, 1, 1}), n - 4);
}

/// Character of S_n on C: trace of the signed permutation action on the basis.
inline ClassFunction C_character(int n) {
  if (n < 4) throw std::invalid_argument("C_character: n must be at least 4");
  const auto basis = degree_two_basis(n);
  ClassFunction chi(n);
  for (const auto& mu : cycle_types_of(n)) {
    const Permutation w(class_representative(mu));
    Rational trace = 0;
    for (const auto& t : basis) {
      DegreeTwoClass b;
      b.add(t, 1);
      trace += act(w, b).coefficient(t);
    }
    chi.set(mu, trace);
  }
  return chi;
}

/// C decomposed from its directly computed character.
inline SchurVector C_as_rep_by_character(int n) { return decompose(C_character(n)).schur; }

struct BranchingCertificate {
  int n = 0;  ///< degree of the target; the search runs over partitions of n+1
  bool feasible = false;
  std::vector<std::pair<Partition, int>> witness;
  std::size_t nodes_explored = 0;
};

/// Complete search for nonnegative integers c_lambda, lambda a partition of
/// n+1, with sum c_lambda Res(s_lambda) = target. A negative result proves
/// that no S_{n+1}-module restricts to the target.
inline BranchingCertificate branching_search(const SchurVector& target) {
  BranchingCertificate cert;
  cert.n = target.degree();
  if (!target.is_effective()) return cert;

  auto candidates = partitions_of(cert.n + 1);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Partition& a, const Partition& b) {
                     return hook_dimension(a) > hook_dimension(b);
                   });
  std::vector<SchurVector> restrictions;
  for (const auto& lambda : candidates) restrictions.push_back(restrict(SchurVector::basis(lambda)));

  std::vector<int> counts(candidates.size(), 0);
  std::function<bool(std::size_t, const SchurVector&)> search =
      [&](std::size_t k, const SchurVector& remaining) -> bool {
    ++cert.nodes_explored;
    if (remaining.is_zero()) return true;
    if (k == candidates.size()) return false;
    // Every restriction coefficient is 1, so c_lambda is bounded by the
    // smallest remaining multiplicity it touches.
    Rational cap = -1;
    for (const auto& [mu, c] : restrictions[k].terms()) {
      const Rational have = remaining.coefficient(mu);
      if (cap < 0 || have / c < cap) cap = have / c;
    }
    const int max_count = static_cast<int>(boost::multiprecision::numerator(cap) /
                                           boost::multiprecision::denominator(cap));
    for (int c = max_count; c >= 0; --c) {
      counts[k] = c;
      if (search(k + 1, remaining - Rational(c) * restrictions[k])) return true;
    }
    counts[k] = 0;
    return false;
  };

  if (search(0, target)) {
    cert.feasible = true;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (counts[k] > 0) cert.witness.emplace_back(candidates[k], counts[k]);
  }
  return cert;
}

/// Whether C for S_n extends to an S_{n+1}-module, by complete search.
inline BranchingCertificate branching_infeasibility(int n) {
  if (n < 4) throw std::invalid_argument("branching_infeasibility: n must be at least 4");
  return branching_search(C_as_rep(n));
}

}  // namespace realtoric
