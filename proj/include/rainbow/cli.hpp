#pragma once
// Command-line front end. run() is the whole program minus main(), so tests can drive it.
//
// Exit codes: 0 success/verified, 1 violation or failed property (witness printed),
// 2 usage or format error, 3 budget exceeded.

#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/addsets.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/document.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/hypercube.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

namespace detail {

inline std::string format_set(const IntSet& s) { return set_to_json(s).dump(); }

inline std::string format_vertex(Vertex v) {
  std::string out = "{";
  bool first = true;
  for (int e : rainbow::detail::elements(v.bits)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

inline std::string format_edge(const Edge& e) {
  return "(" + format_vertex(e.bottom) + ", dir " + std::to_string(e.dir) + ")";
}

inline std::string format_partition(const Partition& p) {
  std::string out;
  for (const auto& part : p.parts) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < part.size(); ++i) out += (i ? "," : "") + std::to_string(part[i]);
    out += "}";
  }
  return out;
}

inline void print_violation(std::ostream& out, const Violation& v) {
  out << "violation: cycle";
  for (Vertex x : v.cycle.vertices()) out << ' ' << format_vertex(x);
  out << "\n  edges " << format_edge(v.e1) << " and " << format_edge(v.e2) << " share color [" << v.color.d << ", "
      << v.color.p << "]\n";
}

struct ConstructArgs {
  int n = 0;
  std::optional<int> k;
  std::string scheme;
  std::string eps = "1";
  std::string sidon = "greedy";
  std::string out;
};

inline int smallest_prime_at_least(int x) {
  while (!is_prime(x)) ++x;
  return x;
}

inline int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const Dim n(a.n);
  std::optional<EdgeColoring> coloring;
  if (a.scheme == "c1") {
    if (!a.k) throw UsageError("scheme c1 needs --k");
    const int k = *a.k;
    if (k < 8 || k % 4 != 0) throw UsageError("scheme c1 requires k = 0 (mod 4) and k >= 8");
    const int t = k / 4 - 1;
    IntSet S;
    if (a.sidon == "greedy") {
      S = greedy_bt(t, static_cast<std::size_t>(a.n));
    } else if (a.sidon == "bose-chowla") {
      // A B_2 set is also a B_1 set, so t = 1 borrows the t = 2 construction.
      S = bose_chowla(std::max(t, 2), smallest_prime_at_least(std::max(a.n, 2)));
    } else {
      throw UsageError("--sidon must be greedy or bose-chowla");
    }
    check_materializable(n);
    coloring = construction1(n, k, S);
    const auto& p = std::get<Construction1Params>(coloring->params());
    out << "construction 1: n=" << a.n << " k=" << k << " t=" << t << " M=" << p.M << " S=" << format_set(p.S) << '\n';
    out << "colors: " << count_colors(*coloring) << " (bound (k/2)*n*(max S + M) = "
        << static_cast<std::int64_t>(k / 2) * a.n * (p.S.max() + p.M) << ")\n";
  } else if (a.scheme == "c2") {
    if (a.k && *a.k != 6) throw UsageError("scheme c2 builds C_6-rainbow colorings; --k must be 6");
    check_materializable(n);
    const auto p = derive_c2_params(a.n, Rational::parse(a.eps));
    coloring = construction2(n, p.S, p.N, p.eps);
    out << "construction 2: n=" << a.n << " eps=" << p.eps->to_string() << " N=" << p.N << " S=" << format_set(p.S)
        << '\n';
    out << "colors: " << count_colors(*coloring) << " (bound 6N = " << 6 * p.N << ")\n";
  } else {
    throw UsageError("--scheme must be c1 or c2");
  }
  if (!a.out.empty()) {
    write_json_file(a.out, coloring_to_json(*coloring));
    out << "wrote " << a.out << '\n';
  }
  return kOk;
}

inline int cmd_verify(const std::string& path, std::optional<int> k_flag, std::ostream& out) {
  const EdgeColoring c = coloring_from_json(read_json_file(path));
  const int k = k_flag.value_or(c.k());
  if (k < 4 || k % 2 != 0 || static_cast<std::uint64_t>(k) > c.dim().vertex_count())
    throw UsageError("--k must be even with 4 <= k <= 2^n");
  const auto report = verify_rainbow(c, k);
  if (report.ok()) {
    out << "rainbow: every C_" << k << " of Q_" << c.dim().value() << " is rainbow (" << count_colors(c)
        << " colors)\n";
    return kOk;
  }
  print_violation(out, *report.violation);
  return kViolation;
}

inline int cmd_exact(int n_raw, int k, double timeout, const std::string& out_path, std::ostream& out) {
  const Dim n(n_raw);
  if (n.value() > kMaxConflictDim) throw UsageError("exact search supports n <= " + std::to_string(kMaxConflictDim));
  if (k < 4 || k % 2 != 0 || static_cast<std::uint64_t>(k) > n.vertex_count())
    throw UsageError("--k must be even with 4 <= k <= 2^n");
  try {
    const auto res = exact_min_colors(n, k, deadline_after(timeout));
    out << "f(" << n.value() << "," << k << ") = " << res.value << '\n';
    if (!out_path.empty()) {
      write_json_file(out_path, coloring_to_json(res.coloring));
      out << "wrote " << out_path << '\n';
    }
    return kOk;
  } catch (const ExactTimeout& t) {
    out << "timeout: " << t.lower() << " <= f(" << n.value() << "," << k << ") <= " << t.upper() << '\n';
    return kBudget;
  }
}

struct SetsArgs {
  std::string kind;
  std::optional<int> t, q;
  std::optional<std::size_t> size;
  std::optional<std::int64_t> N;
  std::string verify_only;
};

inline int cmd_sets(const SetsArgs& a, std::ostream& out) {
  if (a.kind == "bt") {
    if (a.N) throw UsageError("--N applies to --kind behrend");
    if (!a.t) throw UsageError("--kind bt needs --t");
    IntSet S;
    if (!a.verify_only.empty()) {
      if (a.q || a.size) throw UsageError("--verify-only excludes --q and --size");
      S = set_from_json(read_json_file(a.verify_only));
    } else if (a.q && !a.size) {
      S = bose_chowla(*a.t, *a.q);
    } else if (a.size && !a.q) {
      S = greedy_bt(*a.t, *a.size);
    } else {
      throw UsageError("--kind bt needs exactly one of --q, --size or --verify-only");
    }
    const auto check = verify_bt(S, *a.t);
    out << "set: " << format_set(S) << '\n' << "size: " << S.size() << '\n';
    out << "B_" << *a.t << ": " << (check.ok ? "true" : "false") << '\n';
    if (!check.ok) {
      out << "witness: " << Json(check.witness->first).dump() << " and " << Json(check.witness->second).dump()
          << " have equal sums\n";
      return kViolation;
    }
    return kOk;
  }
  if (a.kind == "behrend") {
    if (a.t || a.q || a.size) throw UsageError("--t, --q and --size apply to --kind bt");
    IntSet S;
    if (!a.verify_only.empty()) {
      if (a.N) throw UsageError("--verify-only excludes --N");
      S = set_from_json(read_json_file(a.verify_only));
    } else {
      if (!a.N) throw UsageError("--kind behrend needs --N or --verify-only");
      S = behrend_set(*a.N);
    }
    const auto check = verify_3ap_free(S);
    out << "set: " << format_set(S) << '\n' << "size: " << S.size() << '\n';
    out << "3-AP-free: " << (check.ok ? "true" : "false") << '\n';
    if (!check.ok) {
      const auto& w = *check.witness;
      out << "witness: " << w[0] << ", " << w[1] << ", " << w[2] << '\n';
      return kViolation;
    }
    return kOk;
  }
  throw UsageError("--kind must be bt or behrend");
}

struct GenusArgs {
  std::string eqs;
  std::optional<int> conjecture;
  std::optional<std::int64_t> freeset;
  std::string mode = "exhaustive";
  std::uint64_t budget = kDefaultSolutionBudget;
};

inline int cmd_genus(const GenusArgs& a, std::ostream& out) {
  if (a.eqs.empty() == !a.conjecture.has_value()) throw UsageError("give exactly one of --eqs or --conjecture");
  const EquationSystem sys = a.conjecture ? conjecture_system(*a.conjecture) : equations_from_json(read_json_file(a.eqs));
  for (const auto& eq : sys.equations()) {
    const auto g = genus(eq);
    out << eq.to_string() << "  genus " << g.genus;
    if (g.witness) out << "  partition " << format_partition(*g.witness);
    out << '\n';
  }
  if (!a.freeset) return kOk;
  SearchMode mode;
  if (a.mode == "greedy") mode = SearchMode::greedy;
  else if (a.mode == "exhaustive") mode = SearchMode::exhaustive;
  else throw UsageError("--mode must be greedy or exhaustive");
  try {
    const auto res = equation_free_subset(sys, *a.freeset, mode, a.budget);
    out << "free set: " << format_set(res.set) << '\n'
        << "size: " << res.set.size() << '\n'
        << "optimal: " << (res.optimal ? "true" : "false") << '\n';
    return kOk;
  } catch (const SubsetBudgetError& e) {
    out << "budget exceeded; best so far: " << format_set(e.best_so_far()) << " (size " << e.best_so_far().size()
        << ")\n";
    return kBudget;
  }
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Rainbow edge-colorings of hypercubes: constructions, verification and exact search", "rainbow"};
  app.require_subcommand(1);

  detail::ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a C_k-rainbow coloring from an arithmetic construction");
  construct->add_option("--n", ca.n, "cube dimension")->required();
  construct->add_option("--k", ca.k, "cycle length (c1: k = 0 mod 4, c2: 6)");
  construct->add_option("--scheme", ca.scheme, "c1 or c2")->required();
  construct->add_option("--eps", ca.eps, "c2 exponent slack, N = ceil(n^(1+eps)); decimal or p/q");
  construct->add_option("--sidon", ca.sidon, "c1 set source: greedy or bose-chowla");
  construct->add_option("--out", ca.out, "write the coloring document here");

  std::string verify_path;
  std::optional<int> verify_k;
  auto* verify = app.add_subcommand("verify", "check a coloring document by exhaustive cycle enumeration");
  verify->add_option("--coloring", verify_path, "coloring document")->required();
  verify->add_option("--k", verify_k, "cycle length (default: the document's k)");

  int exact_n = 0, exact_k = 0;
  double timeout = 60.0;
  std::string exact_out;
  auto* exact = app.add_subcommand("exact", "compute f(n,k) exactly on small cubes");
  exact->add_option("--n", exact_n, "cube dimension")->required();
  exact->add_option("--k", exact_k, "cycle length")->required();
  exact->add_option("--timeout", timeout, "seconds before reporting bounds");
  exact->add_option("--out", exact_out, "write an optimal coloring here");

  detail::SetsArgs sa;
  auto* sets = app.add_subcommand("sets", "generate or verify B_t and progression-free sets");
  sets->add_option("--kind", sa.kind, "bt or behrend")->required();
  sets->add_option("--t", sa.t, "B_t order");
  sets->add_option("--q", sa.q, "prime for the Bose-Chowla construction");
  sets->add_option("--size", sa.size, "size of the greedy B_t set");
  sets->add_option("--N", sa.N, "upper bound for the progression-free set");
  sets->add_option("--verify-only", sa.verify_only, "JSON set file to check instead of generating");

  detail::GenusArgs ga;
  auto* genus_cmd = app.add_subcommand("genus", "genus of linear equations and solution-free sets");
  genus_cmd->add_option("--eqs", ga.eqs, "equation file {\"equations\": [[...], ...]}");
  genus_cmd->add_option("--conjecture", ga.conjecture, "use the system for k = 2 (mod 4), k >= 10");
  genus_cmd->add_option("--freeset", ga.freeset, "also search a solution-free subset of [1, N]");
  genus_cmd->add_option("--mode", ga.mode, "greedy or exhaustive");
  genus_cmd->add_option("--budget", ga.budget, "search node budget");

  std::vector<const char*> argv{"rainbow"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*construct) return detail::cmd_construct(ca, out);
    if (*verify) return detail::cmd_verify(verify_path, verify_k, out);
    if (*exact) return detail::cmd_exact(exact_n, exact_k, timeout, exact_out, out);
    if (*sets) return detail::cmd_sets(sa, out);
    if (*genus_cmd) return detail::cmd_genus(ga, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace rainbow::cli
