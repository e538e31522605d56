#pragma once

// JSON encodings of the external formats. Subsets are sorted 1-based label
// lists; rationals are JSON integers when integral and "p/q" strings otherwise.

#include <map>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cup_product.hpp"

namespace realtoric::json_io {

using nlohmann::json;

inline json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json rational_to_json(const Rational& q) {
  if (is_integral(q)) return integer_to_json(boost::multiprecision::numerator(q));
  return format_rational(q);
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be an array of integers");
  return Partition(j.get<std::vector<int>>());
}

inline std::string cycle_type_key(const CycleType& mu) { return mu.partition.str(); }

inline json subset_to_json(Subset s) { return subset_elements(s); }

inline json to_json(const SubsetChain& c) {
  json out = json::array();
  for (Subset b : c.blocks()) out.push_back(subset_to_json(b));
  return out;
}

inline SubsetChain chain_from_json(int n, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("chain must be an array of subsets");
  std::vector<Subset> blocks;
  for (const auto& b : j) blocks.push_back(subset_from_elements(b.get<std::vector<int>>(), n));
  return SubsetChain(n, std::move(blocks));
}

/// [{partition, numerator, denominator}] in reverse lexicographic order.
inline json to_json(const SchurVector& v) {
  json out = json::array();
  for (const auto& [lambda, c] : v.terms())
    out.push_back({{"partition", to_json(lambda)},
                   {"numerator", integer_to_json(boost::multiprecision::numerator(c))},
                   {"denominator", integer_to_json(boost::multiprecision::denominator(c))}});
  return out;
}

inline SchurVector schur_vector_from_json(int n, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("SchurVector must be an array");
  SchurVector v(n);
  for (const auto& term : j) {
    const Integer num(term.at("numerator").is_string() ? term.at("numerator").get<std::string>()
                                                       : term.at("numerator").dump());
    const Integer den(term.at("denominator").is_string()
                          ? term.at("denominator").get<std::string>()
                          : term.at("denominator").dump());
    if (den == 0) throw std::invalid_argument("zero denominator");
    v.add(partition_from_json(term.at("partition")), Rational(num, den));
  }
  return v;
}

/// [{n, t_power, schur_vector}] ordered by (n, t_power).
inline json to_json(const RepSeries& s) {
  json out = json::array();
  for (const auto& [key, v] : s.terms())
    out.push_back({{"n", key.first}, {"t_power", key.second}, {"schur_vector", to_json(v)}});
  return out;
}

inline json to_json(const ClassFunction& f) {
  json out = json::object();
  for (const auto& mu : cycle_types_of(f.degree())) out[cycle_type_key(mu)] = rational_to_json(f(mu));
  return out;
}

/// {n, components: [{subset, coords}]} with subsets in increasing mask order.
inline json to_json(const ModelPoint& p) {
  json comps = json::array();
  for (Subset I = 1; I <= full_set(p.n()); ++I) {
    json coords = json::array();
    for (const auto& c : p.component(I)) coords.push_back(rational_to_json(c));
    comps.push_back({{"subset", subset_to_json(I)}, {"coords", coords}});
  }
  return {{"n", p.n()}, {"components", comps}};
}

/// Components may come in any order. Singleton components may be omitted;
/// they default to (1).
inline ModelPoint model_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("components"))
    throw std::invalid_argument("model point JSON needs fields n and components");
  const int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxModelDegree)
    throw std::invalid_argument("model point n must lie in [1," + std::to_string(kMaxModelDegree) +
                                "]");
  std::vector<std::vector<Rational>> comps(std::size_t{1} << n);
  std::vector<bool> seen(comps.size(), false);
  for (const auto& c : j.at("components")) {
    const Subset I = subset_from_elements(c.at("subset").get<std::vector<int>>(), n);
    if (I == 0) throw std::invalid_argument("model point component with empty subset");
    if (seen[I]) throw std::invalid_argument("duplicate component for a subset");
    seen[I] = true;
    for (const auto& x : c.at("coords")) comps[I].push_back(rational_from_json(x));
  }
  for (Subset I = 1; I <= full_set(n); ++I) {
    if (seen[I]) continue;
    if (subset_size(I) != 1)
      throw std::invalid_argument("model point is missing the component for subset " +
                                  subset_to_json(I).dump());
    comps[I] = {Rational(1)};
  }
  return ModelPoint(n, std::move(comps));
}

inline json to_json(const BranchingCertificate& c) {
  json witness = json::array();
  for (const auto& [lambda, mult] : c.witness)
    witness.push_back({{"partition", to_json(lambda)}, {"multiplicity", mult}});
  return {{"n", c.n}, {"status", c.feasible ? "feasible" : "infeasible"}, {"witness", witness}};
}

inline json to_json(const Verification& v) {
  json out = {{"verified", v.passed}};
  if (!v.passed) out["first_failure"] = {{"n", v.n}, {"i", v.i}, {"detail", v.detail}};
  return out;
}

}  // namespace realtoric::json_io
