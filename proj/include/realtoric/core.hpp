#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace realtoric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Subsets of [n] are bitmasks internally: bit k stands for element k+1.
using Subset = std::uint32_t;

inline constexpr int kMaxGround = 16;

inline Subset full_set(int n) { return n == 0 ? Subset{0} : (Subset{1} << n) - 1; }

inline int subset_size(Subset s) { return std::popcount(s); }

inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

/// Elements of `s` as 1-based labels, increasing.
inline std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int k = 0; s != 0; ++k, s >>= 1)
    if (s & 1u) out.push_back(k + 1);
  return out;
}

inline Subset subset_from_elements(const std::vector<int>& elems, int n) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 1 || e > n)
      throw std::invalid_argument("subset element " + std::to_string(e) + " outside [1," +
                                  std::to_string(n) + "]");
    Subset bit = Subset{1} << (e - 1);
    if (s & bit) throw std::invalid_argument("repeated subset element " + std::to_string(e));
    s |= bit;
  }
  return s;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return static_cast<std::int64_t>(v);
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

inline std::string format_rational(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

}  // namespace realtoric
