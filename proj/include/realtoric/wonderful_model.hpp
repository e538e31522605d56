#pragma once

// Points of the closure Y_n of the torus T_n inside the product of the
// projective spaces P^I over nonempty I in [n], with their torus-orbit
// stratification by chains of subsets.

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohomology.hpp"

namespace realtoric {

inline constexpr int kMaxModelDegree = 10;

namespace detail {

/// Position of element k (0-based) inside the increasing list of I.
inline int position_in(Subset I, int k) {
  return subset_size(I & ((Subset{1} << k) - 1));
}

inline void check_model_degree(int n) {
  if (n < 1 || n > kMaxModelDegree)
    throw std::out_of_range("model degree must lie in [1," + std::to_string(kMaxModelDegree) + "]");
}

}  // namespace detail

/// Two coordinate tuples are linearly dependent iff every 2x2 minor vanishes.
inline bool linearly_dependent(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("linearly_dependent: size mismatch");
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y)
      if (a[x] * b[y] != a[y] * b[x]) return false;
  return true;
}

/// Permutation of [n] stored 0-based: images[i] = w(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }
  static Permutation identity(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k;
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }

  Subset apply(Subset s) const {
    Subset out = 0;
    for (int k = 0; k < size(); ++k)
      if (s & (Subset{1} << k)) out |= Subset{1} << images_[k];
    return out;
  }

 private:
  std::vector<int> images_;
};

/// Point of T_n: nonzero coordinates up to global scaling.
class TorusElement {
 public:
  explicit TorusElement(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("torus element needs at least one coordinate");
    for (const auto& c : coords_)
      if (c == 0) throw std::invalid_argument("torus element coordinates must be nonzero");
  }
  int size() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_.at(i); }
  const std::vector<Rational>& coords() const { return coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Family of projective tuples (a_i^I)_{i in I}, one per nonempty I in [n].
class ModelPoint {
 public:
  /// `components[I]` lists the I-coordinates in increasing element order;
  /// index 0 (the empty set) is ignored.
  ModelPoint(int n, std::vector<std::vector<Rational>> components)
      : n_(n), components_(std::move(components)) {
    detail::check_model_degree(n);
    if (components_.size() != (std::size_t{1} << n))
      throw std::invalid_argument("model point needs one component per subset of [n]");
    components_[0].clear();
    for (Subset I = 1; I <= full_set(n); ++I) validate(I, components_[I]);
  }

  int n() const { return n_; }
  const std::vector<Rational>& component(Subset I) const { return components_.at(I); }
  /// a_k^I for k in I, k 0-based.
  const Rational& coordinate(Subset I, int k) const {
    return components_.at(I).at(detail::position_in(I, k));
  }

  friend bool operator==(const ModelPoint&, const ModelPoint&) = default;

  /// Projective equality of every component.
  bool projectively_equal(const ModelPoint& o) const {
    if (o.n_ != n_) return false;
    for (Subset I = 1; I <= full_set(n_); ++I)
      if (!linearly_dependent(components_[I], o.components_[I])) return false;
    return true;
  }

 private:
  void validate(Subset I, const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != subset_size(I))
      throw std::invalid_argument("component for subset of size " +
                                  std::to_string(subset_size(I)) + " has " +
                                  std::to_string(coords.size()) + " coordinates");
    for (const auto& c : coords)
      if (c != 0) return;
    throw std::invalid_argument("component has all coordinates zero");
  }

  int n_;
  std::vector<std::vector<Rational>> components_;
};

/// I-component of rho(a) is the restriction (a_i)_{i in I}.
inline ModelPoint rho(const TorusElement& a) {
  const int n = a.size();
  detail::check_model_degree(n);
  std::vector<std::vector<Rational>> comps(std::size_t{1} << n);
  for (Subset I = 1; I <= full_set(n); ++I)
    for (int k = 0; k < n; ++k)
      if (I & (Subset{1} << k)) comps[I].push_back(a[k]);
  return ModelPoint(n, std::move(comps));
}

/// For all I in J: (a_i^I)_{i in I} and (a_i^J)_{i in I} linearly dependent.
inline bool is_on_model(const ModelPoint& p) {
  const Subset top = full_set(p.n());
  for (Subset J = 1; J <= top; ++J) {
    for (Subset I = J; I != 0; I = (I - 1) & J) {
      if (I == J) continue;
      std::vector<Rational> restricted;
      for (int k = 0; k < p.n(); ++k)
        if (I & (Subset{1} << k)) restricted.push_back(p.coordinate(J, k));
      if (!linearly_dependent(p.component(I), restricted)) return false;
    }
  }
  return true;
}

/// Orbit label: K_1 = [n], K_{l+1} = {k in K_l : a_k^{K_l} = 0}, until empty.
inline SubsetChain orbit_of(const ModelPoint& p) {
  if (!is_on_model(p)) throw std::domain_error("orbit_of: point does not lie on the model");
  std::vector<Subset> blocks{full_set(p.n())};
  while (blocks.back() != 0) {
    const Subset K = blocks.back();
    Subset next = 0;
    for (int k = 0; k < p.n(); ++k)
      if ((K & (Subset{1} << k)) && p.coordinate(K, k) == 0) next |= Subset{1} << k;
    blocks.push_back(next);
  }
  return SubsetChain(p.n(), std::move(blocks));
}

/// Index s (0-based) of the chain block with I in K_s but not in K_{s+1}.
inline std::size_t stratum_index(const SubsetChain& chain, Subset I) {
  const auto& blocks = chain.blocks();
  for (std::size_t s = 0; s + 1 < blocks.size(); ++s)
    if (is_subset(I, blocks[s]) && !is_subset(I, blocks[s + 1])) return s;
  throw std::logic_error("stratum_index: subset not covered by chain");
}

/// Canonical point of the orbit of `chain`: a^{K_s} is 1 on K_s \ K_{s+1}
/// and 0 on K_{s+1}; every other component is the restriction of the
/// a^{K_s} with I in K_s, I not in K_{s+1}.
inline ModelPoint orbit_representative(const SubsetChain& chain) {
  const int n = chain.n();
  detail::check_model_degree(n);
  std::vector<std::vector<Rational>> comps(std::size_t{1} << n);
  for (Subset I = 1; I <= full_set(n); ++I) {
    const Subset next = chain.blocks()[stratum_index(chain, I) + 1];
    for (int k = 0; k < n; ++k)
      if (I & (Subset{1} << k)) comps[I].push_back((next & (Subset{1} << k)) ? 0 : 1);
  }
  return ModelPoint(n, std::move(comps));
}

/// c * t^exponent.
struct Monomial {
  Rational coefficient;
  int exponent;
};

struct LimitCheck {
  Subset subset;
  std::vector<Rational> limit;
  bool matches;
};

struct DegenerationWitness {
  SubsetChain chain;
  /// q(t) = [a_1(t) : ... : a_n(t)], each a monomial in t.
  std::vector<Monomial> curve;
  std::vector<LimitCheck> checks;
  bool verified = true;
  std::optional<Subset> first_failure;
};

/// Builds q(t) with a_i(t) = t^s a_i^{K_s} for i in K_s \ K_{s+1} (s 1-based)
/// and checks that each I-component of rho(q(t)), divided by the least power
/// of t and evaluated at t = 0, is projectively the I-component of p.
inline DegenerationWitness degeneration_witness(const ModelPoint& p) {
  DegenerationWitness w{orbit_of(p), {}, {}, true, std::nullopt};
  const auto& blocks = w.chain.blocks();
  const int n = p.n();
  w.curve.resize(n);
  for (std::size_t s = 0; s + 1 < blocks.size(); ++s)
    for (int k = 0; k < n; ++k)
      if ((blocks[s] & (Subset{1} << k)) && !(blocks[s + 1] & (Subset{1} << k)))
        w.curve[k] = Monomial{p.coordinate(blocks[s], k), static_cast<int>(s) + 1};

  for (Subset I = 1; I <= full_set(n); ++I) {
    int lowest = std::numeric_limits<int>::max();
    for (int k = 0; k < n; ++k)
      if ((I & (Subset{1} << k)) && w.curve[k].coefficient != 0)
        lowest = std::min(lowest, w.curve[k].exponent);
    std::vector<Rational> limit;
    for (int k = 0; k < n; ++k)
      if (I & (Subset{1} << k))
        limit.push_back(w.curve[k].exponent == lowest ? w.curve[k].coefficient : Rational(0));
    const bool ok = linearly_dependent(limit, p.component(I));
    if (!ok && w.verified) {
      w.verified = false;
      w.first_failure = I;
    }
    w.checks.push_back(LimitCheck{I, std::move(limit), ok});
  }
  return w;
}

/// Torus action: [a_1:...:a_n] . [a_i^I] = [a_i a_i^I].
inline ModelPoint group_act(const TorusElement& g, const ModelPoint& p) {
  if (g.size() != p.n()) throw std::invalid_argument("group_act: torus element size mismatch");
  std::vector<std::vector<Rational>> comps(std::size_t{1} << p.n());
  for (Subset I = 1; I <= full_set(p.n()); ++I)
    for (int k = 0; k < p.n(); ++k)
      if (I & (Subset{1} << k)) comps[I].push_back(g[k] * p.coordinate(I, k));
  return ModelPoint(p.n(), std::move(comps));
}

/// Permutation action: the I-component moves to w(I) with a^{w(I)}_j = a^I_{w^{-1}(j)}.
inline ModelPoint group_act(const Permutation& w, const ModelPoint& p) {
  if (w.size() != p.n()) throw std::invalid_argument("group_act: permutation size mismatch");
  std::vector<std::vector<Rational>> comps(std::size_t{1} << p.n());
  for (Subset I = 1; I <= full_set(p.n()); ++I) {
    const Subset image = w.apply(I);
    comps[image].resize(subset_size(I));
    for (int k = 0; k < p.n(); ++k)
      if (I & (Subset{1} << k))
        comps[image][detail::position_in(image, w(k))] = p.coordinate(I, k);
  }
  return ModelPoint(p.n(), std::move(comps));
}

inline SubsetChain apply(const Permutation& w, const SubsetChain& chain) {
  std::vector<Subset> blocks;
  for (Subset b : chain.blocks()) blocks.push_back(w.apply(b));
  return SubsetChain(chain.n(), std::move(blocks));
}

/// Sum over orbits of the compactly supported Euler characteristic of a
/// real torus of dimension n - m, namely (-2)^{n-m}.
inline Integer euler_characteristic_cells(int n) {
  detail::check_model_degree(n);
  Integer chi = 0;
  for (int m = 1; m <= n; ++m) {
    Integer weight = 1;
    for (int k = 0; k < n - m; ++k) weight *= -2;
    chi += count_chains(n, m) * weight;
  }
  return chi;
}

/// sum_i (-1)^i b_i from the Betti numbers.
inline Integer euler_characteristic_betti(int n) {
  Integer chi = 0;
  for (int i = 0; 2 * i <= n; ++i) chi += (i % 2 == 0 ? 1 : -1) * betti(n, i);
  return chi;
}

/// True iff `finer` contains every block of `coarser`, i.e. the orbit of
/// `finer` lies in the closure of the orbit of `coarser`.
inline bool closure_refinement(const SubsetChain& finer, const SubsetChain& coarser) {
  if (finer.n() != coarser.n()) throw std::invalid_argument("closure_refinement: size mismatch");
  const auto& f = finer.blocks();
  for (Subset b : coarser.blocks())
    if (std::find(f.begin(), f.end(), b) == f.end()) return false;
  return true;
}

/// Closure equations of the orbit of `chain`: a_k^{K_l} = 0 for k in K_{l+1}.
inline bool satisfies_closure_equations(const ModelPoint& p, const SubsetChain& chain) {
  const auto& blocks = chain.blocks();
  for (std::size_t l = 0; l + 1 < blocks.size(); ++l)
    for (int k = 0; k < p.n(); ++k)
      if ((blocks[l + 1] & (Subset{1} << k)) && p.coordinate(blocks[l], k) != 0) return false;
  return true;
}

/// Membership in the closure of the orbit of `chain`. Besides the closure
/// equations, every I in K_l not inside K_{l+1} must have a_k^I = 0 for k in
/// I and K_{l+1}; without these, e.g. the orbit of ([4],{1,2},{}) would pass
/// the equations of ([4],{1},{}) though it is not in that closure.
inline bool in_orbit_closure(const ModelPoint& p, const SubsetChain& chain) {
  if (p.n() != chain.n()) throw std::invalid_argument("in_orbit_closure: size mismatch");
  const auto& blocks = chain.blocks();
  for (std::size_t l = 0; l + 1 < blocks.size(); ++l) {
    const Subset K = blocks[l], below = blocks[l + 1];
    for (Subset I = K; I != 0; I = (I - 1) & K) {
      if (is_subset(I, below)) continue;
      for (int k = 0; k < p.n(); ++k)
        if ((I & below & (Subset{1} << k)) && p.coordinate(I, k) != 0) return false;
    }
  }
  return true;
}

}  // namespace realtoric
