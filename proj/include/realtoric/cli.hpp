#pragma once

// Command dispatch for the realtoric tool. Exit codes: 0 verified / success,
// 1 a check failed (the report names the first failing case), 2 malformed
// input or out-of-range parameters.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace realtoric::cli {

using nlohmann::json;

enum class Format { json, csv, plain };

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::optional<int> i;
  std::optional<int> N;
  Format format = Format::json;
  std::optional<int> bound;
  std::uint64_t seed = 20100601;
  bool describe = false;
  /// ModelPoint JSON source for model-check; empty or "-" means the input stream.
  std::string input;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandInfo {
  const char* name;
  const char* statement;
};

inline const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {"betti-table", "dim H^i(T_n(R), Q) = A_{2i} * C(n, 2i), A_{2i} the Euler secant numbers"},
      {"rep-table",
       "H^i(T_n(R), Q) = sum over even n_1..n_m >= 2 with sum 2i of "
       "(-1)^{i+m} Ind_{S_{n-2i} x S_{n_1} x ... x S_{n_m}}(1 x sign x ... x sign)"},
      {"verify-theorem1",
       "1 + sum_{n>=1} sum_i H^i(T_n(R), Q)(-t)^i = (sum_n 1_{S_n})(1 + sum_{n even >= 2} "
       "sign_{S_n} t^{n/2})^{-1} in R[t]"},
      {"verify-schprop",
       "1 + sum_{n even >= 2} (-1)^{n/2} H_{n/2}(empty, [n]) = (1 + sum_{n even >= 2} "
       "1_{S_n})^{-1} in R"},
      {"poset-homology",
       "the even-subset lattice is Cohen-Macaulay: H_m(empty, [n]) is nonzero only for m = n/2"},
      {"euler-check",
       "sum over orbit chains of (-2)^{n-m} equals sum_i (-1)^i A_{2i} C(n, 2i)"},
      {"model-check",
       "Y_n is cut out by linear dependence of (a_i^I) and (a_i^J)_{i in I} for I in J; its "
       "torus orbits are labelled by the vanishing chains K_{l+1} = {k in K_l : a_k^{K_l} = 0}"},
      {"cup-dim",
       "the span C of cup products of degree-1 classes has dim 3 C(n,4) < 5 C(n,4) = dim H^2"},
      {"cup-rep", "C = Ind_{S_4 x S_{n-4}}(V_(2,1,1) x 1) as an S_n-module"},
      {"branching-check",
       "for n >= 4 no sum of S_{n+1}-irreducibles restricts to C, so the S_n action does not "
       "extend to S_{n+1}"},
      {"whitney",
       "WH_i(B_n^ev) = Ind_{S_{2i} x S_{n-2i}}(H_i(empty, [2i]) x 1), with alternating sum zero "
       "for even n >= 2"},
  };
  return table;
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

inline void check_range(int v, int lo, int hi, const char* flag) {
  if (v < lo || v > hi)
    throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + "," +
                     std::to_string(hi) + "], got " + std::to_string(v));
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline void emit(std::ostream& out, const json& report) { out << report.dump(2) << "\n"; }

struct Context {
  const RunConfig& config;
  std::ostream& out;
  std::istream& in;
  int bound() const { return config.bound.value_or(kDefaultPosetBound); }
};

inline int betti_table(const Context& ctx) {
  const int n = require(ctx.config.n, "--n");
  check_range(n, 1, kMaxFormulaDegree, "--n");
  json rows = json::array();
  for (int i = 0; 2 * i <= n; ++i)
    rows.push_back({{"n", n}, {"i", i}, {"betti", json_io::integer_to_json(betti(n, i))}});
  if (ctx.config.format == Format::csv) {
    ctx.out << "n,i,betti\n";
    for (const auto& r : rows) ctx.out << r["n"] << "," << r["i"] << "," << r["betti"] << "\n";
  } else if (ctx.config.format == Format::plain) {
    for (const auto& r : rows)
      ctx.out << "dim H^" << r["i"] << "(T_" << n << "(R)) = " << r["betti"] << "\n";
  } else {
    emit(ctx.out, {{"command", "betti-table"}, {"rows", rows}});
  }
  return kExitOk;
}

inline int rep_table(const Context& ctx) {
  const int n = require(ctx.config.n, "--n");
  check_range(n, 1, kMaxFormulaDegree, "--n");
  const auto table = cohomology_table(n);
  if (ctx.config.format == Format::csv) {
    const auto parts = partitions_of(n);
    ctx.out << "n,i,betti";
    for (const auto& p : parts) ctx.out << "," << csv_quote(p.str());
    ctx.out << "\n";
    for (const auto& [i, row] : table) {
      ctx.out << n << "," << i << "," << row.betti.str();
      for (const auto& p : parts) ctx.out << "," << format_rational(row.rep.coefficient(p));
      ctx.out << "\n";
    }
  } else if (ctx.config.format == Format::plain) {
    for (const auto& [i, row] : table)
      ctx.out << "H^" << i << "(T_" << n << "(R)) = " << row.rep.str() << "  [dim "
              << row.betti.str() << "]\n";
  } else {
    json rows = json::array();
    for (const auto& [i, row] : table)
      rows.push_back({{"n", n},
                      {"i", i},
                      {"betti", json_io::integer_to_json(row.betti)},
                      {"rep", json_io::to_json(row.rep)}});
    emit(ctx.out, {{"command", "rep-table"}, {"rows", rows}});
  }
  return kExitOk;
}

inline int report_verification(const Context& ctx, const char* name, int N,
                               const Verification& v) {
  if (ctx.config.format == Format::plain) {
    ctx.out << name << " through degree " << N << ": " << (v ? "verified" : "FAILED") << "\n";
    if (!v) ctx.out << "first failure at n=" << v.n << ", i=" << v.i << ": " << v.detail << "\n";
  } else {
    json report = json_io::to_json(v);
    report["command"] = name;
    report["N"] = N;
    emit(ctx.out, report);
  }
  return v ? kExitOk : kExitFailed;
}

inline int verify_theorem1_cmd(const Context& ctx) {
  const int N = require(ctx.config.N, "--N");
  check_range(N, 0, ctx.bound(), "--N");
  return report_verification(ctx, "verify-theorem1", N, verify_theorem1(N, ctx.bound()));
}

inline int verify_schprop_cmd(const Context& ctx) {
  const int N = require(ctx.config.N, "--N");
  check_range(N, 0, ctx.bound(), "--N");
  return report_verification(ctx, "verify-schprop", N, verify_schprop(N, ctx.bound()));
}

inline int poset_homology_cmd(const Context& ctx) {
  const int n = require(ctx.config.n, "--n");
  check_range(n, 0, ctx.bound(), "--n");
  if (n % 2 != 0) throw UsageError("--n must be even for poset-homology");
  const auto ranks = homology_ranks(n, ctx.bound());
  const bool concentrated = cm_concentration_check(n, ctx.bound());
  json ranks_json = json::object();
  for (const auto& [m, r] : ranks) ranks_json[std::to_string(m)] = r;
  json report = {{"command", "poset-homology"}, {"n", n}, {"ranks", ranks_json},
                 {"concentrated", concentrated}};
  if (concentrated) {
    const auto chi = equivariant_top_character(n, ctx.bound());
    report["character"] = json_io::to_json(chi);
    report["decomposition"] = json_io::to_json(decompose(chi).schur);
  }
  if (ctx.config.format == Format::plain) {
    for (const auto& [m, r] : ranks) ctx.out << "rank H_" << m << " = " << r << "\n";
    ctx.out << (concentrated ? "concentrated in top degree\n" : "NOT concentrated\n");
  } else {
    emit(ctx.out, report);
  }
  return concentrated ? kExitOk : kExitFailed;
}

inline int euler_check_cmd(const Context& ctx) {
  const int n = require(ctx.config.n, "--n");
  check_range(n, 1, kMaxModelDegree, "--n");
  json rows = json::array();
  int status = kExitOk;
  for (int k = 1; k <= n; ++k) {
    const Integer cells = euler_characteristic_cells(k);
    const Integer from_betti = euler_characteristic_betti(k);
    const bool agree = cells == from_betti;
    rows.push_back({{"n", k},
                    {"cells", json_io::integer_to_json(cells)},
                    {"betti", json_io::integer_to_json(from_betti)},
                    {"agree", agree}});
    if (!agree && status == kExitOk) status = kExitFailed;
  }
  if (ctx.config.format == Format::plain) {
    for (const auto& r : rows)
      ctx.out << "n=" << r["n"] << " cells=" << r["cells"] << " betti=" << r["betti"]
              << (r["agree"].get<bool>() ? "" : "  MISMATCH") << "\n";
  } else if (ctx.config.format == Format::csv) {
    ctx.out << "n,cells,betti,agree\n";
    for (const auto& r : rows)
      ctx.out << r["n"] << "," << r["cells"] << "," << r["betti"] << "," << r["agree"] << "\n";
  } else {
    emit(ctx.out, {{"command", "euler-check"}, {"rows", rows}});
  }
  return status;
}

inline json read_input(const Context& ctx) {
  try {
    if (ctx.config.input.empty() || ctx.config.input == "-") return json::parse(ctx.in);
    std::ifstream file(ctx.config.input);
    if (!file) throw UsageError("cannot open input file " + ctx.config.input);
    return json::parse(file);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
}

inline int model_check_cmd(const Context& ctx) {
  ModelPoint p = [&] {
    try {
      return json_io::model_point_from_json(read_input(ctx));
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed model point: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("malformed model point: ") + e.what());
    }
  }();
  json report = {{"command", "model-check"}, {"n", p.n()}};
  const bool on_model = is_on_model(p);
  report["on_model"] = on_model;
  if (!on_model) {
    emit(ctx.out, report);
    return kExitFailed;
  }
  const SubsetChain chain = orbit_of(p);
  report["orbit"] = json_io::to_json(chain);
  report["orbit_dimension"] = p.n() - chain.steps();

  const auto witness = degeneration_witness(p);
  json curve = json::array();
  for (const auto& mono : witness.curve)
    curve.push_back({{"coefficient", json_io::rational_to_json(mono.coefficient)},
                     {"exponent", mono.exponent}});
  json degeneration = {{"verified", witness.verified}, {"curve", curve}};
  if (witness.first_failure) degeneration["failing_subset"] = json_io::subset_to_json(*witness.first_failure);
  report["degeneration"] = degeneration;

  // Randomized equivariance sampling under torus and permutation actions.
  std::mt19937_64 rng(ctx.config.seed);
  std::uniform_int_distribution<int> coord(1, 9), flip(0, 1);
  constexpr int kTrials = 20;
  int passed = 0;
  std::optional<std::string> equivariance_failure;
  for (int trial = 0; trial < kTrials; ++trial) {
    std::vector<Rational> g;
    for (int k = 0; k < p.n(); ++k) g.emplace_back(flip(rng) ? coord(rng) : -coord(rng), coord(rng));
    std::vector<int> images(p.n());
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation w(images);
    const ModelPoint tp = group_act(TorusElement(g), p);
    const ModelPoint wp = group_act(w, p);
    const bool ok = is_on_model(tp) && is_on_model(wp) && orbit_of(tp) == chain &&
                    orbit_of(wp) == apply(w, chain);
    if (ok)
      ++passed;
    else if (!equivariance_failure)
      equivariance_failure = "trial " + std::to_string(trial);
  }
  report["equivariance"] = {{"seed", ctx.config.seed}, {"trials", kTrials}, {"passed", passed}};
  if (equivariance_failure) report["equivariance"]["first_failure"] = *equivariance_failure;

  const bool ok = witness.verified && !equivariance_failure;
  if (ctx.config.format == Format::plain) {
    ctx.out << "on model: yes\norbit: " << json_io::to_json(chain).dump() << "\n"
            << "degeneration: " << (witness.verified ? "verified" : "FAILED") << "\n"
            << "equivariance: " << passed << "/" << kTrials << "\n";
  } else {
    emit(ctx.out, report);
  }
  return ok ? kExitOk : kExitFailed;
}

inline Integer expected_cup_dimension(int n) { return 3 * binomial(n, 4); }

inline int cup_dim_cmd(const Context& ctx) {
  const int n = require(ctx.config.n, "--n");
  check_range(n, 2, kMaxFormulaDegree, "--n");
  const std::size_t dim = cup_span_dimension(n);
  const Integer expected = expected_cup_dimension(n);
  const bool ok = Integer(dim) == expected;
  if (ctx.config.format == Format::plain) {
    ctx.out << "dim C = " << dim << " (expected " << expected.str() << "), dim H^2 = "
            << betti(n, 2).str() << "\n";
  } else {
    emit(ctx.out, {{"command", "cup-dim"},
                   {"n", n},
                   {"dimension", dim},
                   {"expected", json_io::integer_to_json(expected)},
                   {"h2", json_io::integer_to_json(betti(n, 2))},
                   {"agree", ok}});
  }
  return ok ? kExitOk : kExitFailed;
}

inline int cup_rep_cmd(const Context& ctx) {
  const int n = require(ctx.config.n, "--n");
  check_range(n, 4, kMaxFormulaDegree, "--n");
  const SchurVector pieri = C_as_rep(n);
  const SchurVector by_character = C_as_rep_by_character(n);
  const bool ok = pieri == by_character;
  if (ctx.config.format == Format::plain) {
    ctx.out << "C = " << pieri.str() << (ok ? "" : "  (character route: " + by_character.str() + ")")
            << "\n";
  } else {
    emit(ctx.out, {{"command", "cup-rep"},
                   {"n", n},
                   {"pieri", json_io::to_json(pieri)},
                   {"character", json_io::to_json(by_character)},
                   {"agree", ok}});
  }
  return ok ? kExitOk : kExitFailed;
}

inline int branching_check_cmd(const Context& ctx) {
  const int n = require(ctx.config.n, "--n");
  check_range(n, 4, kMaxFormulaDegree, "--n");
  const auto cert = branching_infeasibility(n);
  if (ctx.config.format == Format::plain) {
    ctx.out << "n=" << n << ": " << (cert.feasible ? "feasible" : "infeasible") << "\n";
  } else {
    json report = json_io::to_json(cert);
    report["command"] = "branching-check";
    emit(ctx.out, report);
  }
  return cert.feasible ? kExitFailed : kExitOk;
}

inline int whitney_cmd(const Context& ctx) {
  const int n = require(ctx.config.n, "--n");
  check_range(n, 0, kMaxFormulaDegree, "--n");
  std::vector<int> degrees;
  if (ctx.config.i) {
    check_range(*ctx.config.i, 0, n / 2, "--i");
    degrees.push_back(*ctx.config.i);
  } else {
    for (int i = 0; 2 * i <= n; ++i) degrees.push_back(i);
  }
  for (int i : degrees)
    if (2 * i > ctx.bound())
      throw UsageError("--i " + std::to_string(i) + " needs an interval above --bound");
  json terms = json::array();
  SchurVector alternating(n);
  for (int i : degrees) {
    const SchurVector wh = whitney_homology(n, i, ctx.bound());
    alternating += i % 2 == 0 ? wh : -wh;
    terms.push_back({{"i", i}, {"rep", json_io::to_json(wh)}});
  }
  json report = {{"command", "whitney"}, {"n", n}, {"terms", terms}};
  int status = kExitOk;
  if (!ctx.config.i && n >= 2 && n % 2 == 0) {
    report["alternating_sum"] = json_io::to_json(alternating);
    report["vanishes"] = alternating.is_zero();
    if (!alternating.is_zero()) status = kExitFailed;
  }
  if (ctx.config.format == Format::plain) {
    for (int i : degrees) ctx.out << "WH_" << i << " = " << whitney_homology(n, i, ctx.bound()).str() << "\n";
    if (report.contains("vanishes"))
      ctx.out << "alternating sum " << (alternating.is_zero() ? "vanishes" : "DOES NOT vanish") << "\n";
  } else {
    emit(ctx.out, report);
  }
  return status;
}

}  // namespace detail

inline int describe(const RunConfig& config, std::ostream& out) {
  json report = json::object();
  for (const auto& c : commands())
    if (config.command.empty() || config.command == c.name) report[c.name] = c.statement;
  if (report.empty()) return kExitUsage;
  if (config.format == Format::plain) {
    for (const auto& [name, statement] : report.items())
      out << name << ": " << statement.get<std::string>() << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
  return kExitOk;
}

/// Runs one command. Output goes to `out`; diagnostics for usage errors go to `err`.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  if (config.describe) {
    const int status = describe(config, out);
    if (status != kExitOk) err << "unknown command '" << config.command << "'\n";
    return status;
  }
  using Handler = int (*)(const detail::Context&);
  static const std::map<std::string, Handler> handlers = {
      {"betti-table", detail::betti_table},
      {"rep-table", detail::rep_table},
      {"verify-theorem1", detail::verify_theorem1_cmd},
      {"verify-schprop", detail::verify_schprop_cmd},
      {"poset-homology", detail::poset_homology_cmd},
      {"euler-check", detail::euler_check_cmd},
      {"model-check", detail::model_check_cmd},
      {"cup-dim", detail::cup_dim_cmd},
      {"cup-rep", detail::cup_rep_cmd},
      {"branching-check", detail::branching_check_cmd},
      {"whitney", detail::whitney_cmd},
  };
  auto it = handlers.find(config.command);
  if (it == handlers.end()) {
    err << "unknown command '" << config.command << "'\n";
    return kExitUsage;
  }
  if (config.bound) {
    try {
      check_poset_bound(0, *config.bound);
    } catch (const std::out_of_range& e) {
      err << e.what() << "\n";
      return kExitUsage;
    }
  }
  if (config.format == Format::csv && config.command != "betti-table" &&
      config.command != "rep-table" && config.command != "euler-check") {
    err << "--format csv is only available for table commands\n";
    return kExitUsage;
  }
  try {
    return it->second(detail::Context{config, out, in});
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace realtoric::cli
