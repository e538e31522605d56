#pragma once

// Rational cohomology of the real points of the type-A Coxeter toric variety
// as graded S_n-representations, by two independent routes:
//   * induction: signed sums of Ind(sign x ... x sign x trivial), iterated Pieri;
//   * poset: sign-twisted top homology of the even-subset lattice, induced up.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "poset_homology.hpp"

namespace realtoric {

/// Largest n served by the formula-only routes.
inline constexpr int kMaxFormulaDegree = 12;

/// dim H^i = A_{2i} * C(n, 2i).
inline Integer betti(int n, int i) {
  if (n < 1 || i < 0) throw std::invalid_argument("betti: need n >= 1 and i >= 0");
  if (2 * i > n) return 0;
  return secant_number(2 * i) * binomial(n, 2 * i);
}

/// Ordered tuples of even integers >= 2 summing to total.
inline std::vector<std::vector<int>> even_compositions(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 2; part <= left; part += 2) {
      cur.push_back(part);
      rec(left - part);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

/// sum over even compositions (n_1..n_m) of 2i of
/// (-1)^{i+m} e_{n_1} ... e_{n_m} h_{n-2i}.
inline SchurVector rep_via_induction(int n, int i) {
  if (n < 0 || i < 0) throw std::invalid_argument("rep_via_induction: negative argument");
  SchurVector total(n);
  if (2 * i > n) return total;
  for (const auto& parts : even_compositions(2 * i)) {
    SchurVector term = SchurVector::h(n - 2 * i);
    for (int part : parts) term = pieri_e(term, part);
    const int m = static_cast<int>(parts.size());
    total += ((i + m) % 2 == 0) ? term : -term;
  }
  return total;
}

/// Same sum, enumerating multisets of even parts and weighting each by the
/// number of its distinct orderings.
inline SchurVector rep_via_induction_multiset(int n, int i) {
  if (n < 0 || i < 0) throw std::invalid_argument("rep_via_induction_multiset: negative argument");
  SchurVector total(n);
  if (2 * i > n) return total;
  // Multisets of even parts are partitions of i, doubled.
  for (const auto& half : partitions_of(i)) {
    SchurVector term = SchurVector::h(n - 2 * i);
    for (int part : half.parts()) term = pieri_e(term, 2 * part);
    Integer orderings = factorial(half.length());
    for (int p = 1; p <= i; ++p) orderings /= factorial(half.multiplicity(p));
    const int m = half.length();
    Rational weight(orderings);
    total += ((i + m) % 2 == 0 ? weight : -weight) * term;
  }
  return total;
}

/// Induced, sign-twisted top homology of the even interval of size 2i.
inline SchurVector rep_via_poset(int n, int i, int bound = kDefaultPosetBound) {
  if (n < 0 || i < 0) throw std::invalid_argument("rep_via_poset: negative argument");
  if (2 * i > n) return SchurVector(n);
  check_poset_bound(2 * i, bound);
  return pieri_h(omega(top_homology_rep(2 * i, bound)), n - 2 * i);
}

/// 1 + sum_{1<=n<=N} sum_i H^i (-t)^i, with H^i from the poset route.
inline RepSeries theorem1_lhs(int max_degree, int bound = kDefaultPosetBound) {
  RepSeries lhs = RepSeries::one(max_degree);
  for (int n = 1; n <= max_degree; ++n)
    for (int i = 0; 2 * i <= n; ++i) {
      SchurVector h = rep_via_poset(n, i, bound);
      lhs.add_term(n, i, i % 2 == 0 ? h : -h);
    }
  return lhs;
}

/// (sum_n h_n) * (1 + sum_{n even >= 2} e_n t^{n/2})^{-1}.
inline RepSeries theorem1_rhs(int max_degree) {
  RepSeries trivial(max_degree), signs = RepSeries::one(max_degree);
  for (int n = 0; n <= max_degree; ++n) trivial.add_term(n, 0, SchurVector::h(n));
  for (int n = 2; n <= max_degree; n += 2) signs.add_term(n, n / 2, SchurVector::e(n));
  return trivial * series_invert(signs);
}

inline Verification verify_theorem1(int max_degree, int bound = kDefaultPosetBound) {
  if (max_degree < 0) throw std::invalid_argument("verify_theorem1: degree must be nonnegative");
  check_poset_bound(max_degree - max_degree % 2, bound);
  return compare_series(theorem1_lhs(max_degree, bound), theorem1_rhs(max_degree));
}

/// Sets t = 1: the degree-n part becomes a single virtual representation.
inline std::map<int, SchurVector> specialize_t_one(const RepSeries& s) {
  std::map<int, SchurVector> out;
  for (const auto& [key, v] : s.terms()) {
    auto it = out.try_emplace(key.first, key.first).first;
    it->second += v;
  }
  return out;
}

/// Coefficient of t^i x^n / n! in exp(x) sech(t^{1/2} x), from exact series
/// arithmetic with cosh.
inline Rational exp_sech_coefficient(int n, int i) {
  if (2 * i > n) return 0;
  std::vector<Rational> cosh_series(2 * i + 1), sech(2 * i + 1);
  for (int k = 0; k <= 2 * i; k += 2) cosh_series[k] = Rational(1) / Rational(factorial(k));
  sech[0] = 1;
  for (int k = 1; k <= 2 * i; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += cosh_series[j] * sech[k - j];
    sech[k] = -acc;
  }
  // [x^n] exp(x) * sech_{2i} x^{2i}  = sech_{2i} / (n-2i)!
  return sech[2 * i] * Rational(factorial(n)) / Rational(factorial(n - 2 * i));
}

struct SpecializationTable {
  /// (n, i) -> coefficient of t^i x^n/n! obtained from dimensions.
  std::map<std::pair<int, int>, Integer> coefficients;
  Verification check;
};

/// Applies dim to the poset-route left side and compares each coefficient
/// with (-1)^i A_{2i} C(n,2i) and with the exp * sech series.
inline SpecializationTable exponential_specialization(int max_degree,
                                                      int bound = kDefaultPosetBound) {
  SpecializationTable table;
  const RepSeries lhs = theorem1_lhs(max_degree, bound);
  for (int n = 1; n <= max_degree; ++n) {
    for (int i = 0; 2 * i <= n; ++i) {
      const Rational dim = lhs.term(n, i).dimension();
      const Integer expected = (i % 2 == 0 ? 1 : -1) * betti(n, i);
      table.coefficients[{n, i}] = boost::multiprecision::numerator(dim);
      if (!is_integral(dim) || dim != Rational(expected) ||
          dim != exp_sech_coefficient(n, i)) {
        if (table.check)
          table.check = Verification::failure(
              n, i, "dimension " + format_rational(dim) + " != " + expected.str());
      }
    }
  }
  return table;
}

struct CohomologyRow {
  Integer betti;
  SchurVector rep;
};

/// H^i for every i with 2i <= n, from the induction route.
inline std::map<int, CohomologyRow> cohomology_table(int n) {
  if (n < 1 || n > kMaxFormulaDegree)
    throw std::out_of_range("cohomology_table: n must lie in [1," +
                            std::to_string(kMaxFormulaDegree) + "]");
  std::map<int, CohomologyRow> rows;
  for (int i = 0; 2 * i <= n; ++i) {
    SchurVector rep = rep_via_induction(n, i);
    Integer b = betti(n, i);
    if (rep.dimension() != Rational(b))
      throw std::logic_error("cohomology_table: dimension of H^" + std::to_string(i) +
                             " disagrees with the Betti number");
    rows.emplace(i, CohomologyRow{std::move(b), std::move(rep)});
  }
  return rows;
}

}  // namespace realtoric
