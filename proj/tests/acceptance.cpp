// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// status if any criterion fails. Expected values come from closed forms or
// independent routes, never from the route under test alone.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "realtoric/realtoric.hpp"

using namespace realtoric;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.passed = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (outcome.passed && seconds > budget_seconds) {
    outcome.passed = false;
    std::ostringstream msg;
    msg << "over time budget of " << budget_seconds << " s";
    outcome.detail = msg.str();
  }
  if (!outcome.passed) ++failures;
  std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", outcome.passed ? "PASS" : "FAIL", number,
              title, seconds, outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
  std::fflush(stdout);
}

std::string at(int n, int i) { return "n=" + std::to_string(n) + " i=" + std::to_string(i); }

/// A_{2i} from the exponential generating function sec(x) = 1/cos(x), by
/// long division of power series with rational coefficients.
std::vector<Rational> secant_by_division(int max_index) {
  std::vector<Rational> cos_series(max_index + 1), sec(max_index + 1);
  for (int k = 0; 2 * k <= max_index; ++k)
    cos_series[2 * k] = Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(2 * k));
  for (int d = 0; d <= max_index; ++d) {
    Rational acc = d == 0 ? 1 : 0;
    for (int k = 1; k <= d; ++k) acc -= cos_series[k] * sec[d - k];
    sec[d] = acc;
  }
  std::vector<Rational> out;
  for (int k = 0; 2 * k <= max_index; ++k) out.push_back(sec[2 * k] * Rational(factorial(2 * k)));
  return out;
}

SchurVector schur_sum(std::initializer_list<Partition> parts) {
  SchurVector v(parts.begin()->size());
  for (const auto& p : parts) v.add(p, 1);
  return v;
}

ModelPoint y3_point(std::vector<Rational> a, std::vector<Rational> b, std::vector<Rational> c,
                    std::vector<Rational> d) {
  std::vector<std::vector<Rational>> comps(8);
  comps[0b001] = comps[0b010] = comps[0b100] = {1};
  comps[0b111] = std::move(a);
  comps[0b011] = std::move(b);
  comps[0b101] = std::move(c);
  comps[0b110] = std::move(d);
  return ModelPoint(3, std::move(comps));
}

}  // namespace

int main() {
  criterion(1, "Betti numbers A_{2i} C(n,2i) for n <= 10, i <= 5", 1.0, [](Outcome& o) {
    const auto secant = secant_by_division(10);
    for (int n = 1; n <= 10; ++n)
      for (int i = 0; i <= 5; ++i) {
        const Rational expected = 2 * i <= n ? secant[i] * Rational(binomial(n, 2 * i)) : Rational(0);
        o.require(Rational(betti(n, i)) == expected, "betti mismatch at " + at(n, i));
      }
    o.require(betti(4, 2) == 5, "dim H^2(T_4) != 5");
    for (int n = 2; n <= 10; ++n) o.require(betti(n, 1) == binomial(n, 2), "dim H^1 != C(n,2)");
  });

  criterion(2, "generating-function identity in R[t] through degree 8", 120.0, [](Outcome& o) {
    const Verification v = verify_theorem1(8);
    o.require(static_cast<bool>(v), v.detail);
  });

  criterion(3, "induction route equals poset route for n <= 8, 2i <= 6", 120.0, [](Outcome& o) {
    for (int n = 1; n <= 8; ++n)
      for (int i = 0; 2 * i <= std::min(n, 6); ++i)
        o.require(rep_via_induction(n, i) == rep_via_poset(n, i), "routes differ at " + at(n, i));
  });

  criterion(4, "top homology ranks 1,1,5,61,1385 and concentration", 120.0, [](Outcome& o) {
    const auto secant = secant_numbers(8);
    for (int n = 0; n <= 8; n += 2) {
      const auto ranks = homology_ranks(n);
      for (const auto& [m, rank] : ranks) {
        const std::size_t expected = m == n / 2 ? secant[n / 2].convert_to<std::size_t>() : 0;
        o.require(rank == expected, "rank of H_" + std::to_string(m) + " for n=" + std::to_string(n));
      }
      o.require(cm_concentration_check(n), "homology not concentrated for n=" + std::to_string(n));
    }
    o.require(homology_ranks(8).at(4) == 1385, "H_4 for n=8 is not 1385");
  });

  criterion(5, "series identity for top homology through degree 8", 120.0, [](Outcome& o) {
    const Verification v = verify_schprop(8);
    o.require(static_cast<bool>(v), v.detail);
  });

  criterion(6, "Whitney homology alternating sum vanishes for n = 4, 6, 8", 120.0, [](Outcome& o) {
    for (int n = 4; n <= 8; n += 2) {
      SchurVector total(n);
      for (int i = 0; 2 * i <= n; ++i) {
        const SchurVector wh = whitney_homology(n, i);
        total += i % 2 == 0 ? wh : -wh;
      }
      o.require(total.is_zero(), "nonzero alternating sum for n=" + std::to_string(n));
    }
  });

  criterion(7, "Euler characteristic from cells equals Betti route for n <= 10", 10.0,
            [](Outcome& o) {
              for (int n = 1; n <= 10; ++n)
                o.require(euler_characteristic_cells(n) == euler_characteristic_betti(n),
                          "mismatch for n=" + std::to_string(n));
              o.require(euler_characteristic_cells(2) == 0, "n=2 is not 0");
              o.require(euler_characteristic_cells(3) == -2, "n=3 is not -2");
              o.require(euler_characteristic_cells(4) == 0, "n=4 is not 0");
            });

  criterion(8, "model equations, orbit strata, degenerations and equivariance", 30.0,
            [](Outcome& o) {
              // Equations of Y_3 over a grid of small coordinates.
              const std::vector<std::vector<Rational>> pairs{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
              const std::vector<std::vector<Rational>> triples{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 2},
                                                               {1, 0, 2}, {1, 2, 0}, {1, 2, 3}, {2, 1, 1}};
              for (const auto& a : triples)
                for (const auto& b : pairs)
                  for (const auto& c : pairs)
                    for (const auto& d : pairs) {
                      const bool by_hand = a[0] * b[1] == a[1] * b[0] && a[0] * c[1] == a[2] * c[0] &&
                                           a[1] * d[1] == a[2] * d[0];
                      o.require(is_on_model(y3_point(a, b, c, d)) == by_hand, "Y_3 equations");
                    }

              // The four strata of Y_3 listed by their vanishing conditions.
              auto chain = [](std::vector<std::vector<int>> blocks) {
                std::vector<Subset> masks;
                for (const auto& b : blocks) masks.push_back(subset_from_elements(b, 3));
                return SubsetChain(3, masks);
              };
              o.require(orbit_of(y3_point({1, 2, 3}, {1, 2}, {1, 3}, {2, 3})) == chain({{1, 2, 3}, {}}),
                        "generic stratum");
              o.require(orbit_of(y3_point({0, 2, 3}, {0, 1}, {0, 1}, {2, 3})) ==
                            chain({{1, 2, 3}, {1}, {}}),
                        "stratum a_1 = 0");
              o.require(orbit_of(y3_point({0, 0, 1}, {2, 5}, {0, 1}, {0, 1})) ==
                            chain({{1, 2, 3}, {1, 2}, {}}),
                        "stratum a_1 = a_2 = 0");
              o.require(orbit_of(y3_point({0, 0, 1}, {0, 1}, {0, 1}, {0, 1})) ==
                            chain({{1, 2, 3}, {1, 2}, {1}, {}}),
                        "stratum a_1 = a_2 = b_1 = 0");

              // Every orbit of Y_4.
              std::size_t chains4 = 0;
              for (int m = 1; m <= 4; ++m)
                for (const auto& c : enumerate_chains(4, m)) {
                  ++chains4;
                  const auto w = degeneration_witness(orbit_representative(c));
                  o.require(w.verified && w.chain == c, "degeneration failed for a chain of [4]");
                }
              o.require(chains4 == 75, "expected 75 chains of [4]");

              // Random equivariance trials.
              std::mt19937 rng(20100601);
              std::uniform_int_distribution<int> num(1, 9), sign(0, 1);
              for (int n = 1; n <= 5; ++n) {
                std::vector<SubsetChain> chains;
                for (int m = 1; m <= n; ++m)
                  for (auto& c : enumerate_chains(n, m)) chains.push_back(std::move(c));
                std::uniform_int_distribution<std::size_t> pick(0, chains.size() - 1);
                for (int trial = 0; trial < 60; ++trial) {
                  auto torus = [&] {
                    std::vector<Rational> g;
                    for (int k = 0; k < n; ++k) g.emplace_back(sign(rng) ? num(rng) : -num(rng), num(rng));
                    return TorusElement(g);
                  };
                  const SubsetChain& c = chains[pick(rng)];
                  const ModelPoint p = trial % 2 == 0 ? group_act(torus(), orbit_representative(c))
                                                      : rho(torus());
                  std::vector<int> images(n);
                  for (int k = 0; k < n; ++k) images[k] = k;
                  std::shuffle(images.begin(), images.end(), rng);
                  const Permutation w(images);
                  const ModelPoint tp = group_act(torus(), p), wp = group_act(w, p);
                  o.require(is_on_model(tp) && is_on_model(wp), "action left the model");
                  o.require(orbit_of(tp) == orbit_of(p), "torus action moved the orbit");
                  o.require(orbit_of(wp) == apply(w, orbit_of(p)), "permutation action on orbits");
                }
              }
            });

  criterion(9, "cup-product span C: dimension and S_n-module by two routes", 120.0, [](Outcome& o) {
    for (int n = 4; n <= 10; ++n)
      o.require(Integer(cup_span_dimension(n)) == 3 * binomial(n, 4),
                "dim C for n=" + std::to_string(n));
    std::map<int, SchurVector> expected{
        {4, SchurVector::basis({2, 1, 1})},
        {5, schur_sum({{3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}})},
    };
    for (int n = 6; n <= 8; ++n)
      expected.emplace(n, schur_sum({{n - 2, 1, 1}, {n - 3, 2, 1}, {n - 3, 1, 1, 1}, {n - 4, 2, 1, 1}}));
    for (const auto& [n, rep] : expected) {
      o.require(C_as_rep(n) == rep, "Pieri route for n=" + std::to_string(n));
      o.require(C_as_rep_by_character(n) == rep, "character route for n=" + std::to_string(n));
    }
  });

  criterion(10, "C does not extend to S_{n+1} for n = 4..7", 60.0, [](Outcome& o) {
    for (int n = 4; n <= 7; ++n) {
      const auto cert = branching_infeasibility(n);
      std::string witness;
      for (const auto& [lambda, c] : cert.witness)
        witness += (witness.empty() ? "" : " + ") + std::to_string(c) + "*s" + lambda.str();
      o.require(!cert.feasible, "found an extension for n=" + std::to_string(n) + ": " + witness);
    }
    for (int n = 4; n <= 7; ++n) {
      const auto cert = branching_search(restrict(SchurVector::h(n + 1)));
      o.require(cert.feasible && cert.witness.size() == 1 &&
                    cert.witness[0].first == Partition::row(n + 1) && cert.witness[0].second == 1,
                "sanity witness for n=" + std::to_string(n));
    }
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
