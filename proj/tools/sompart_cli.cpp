// sompart: solve, generate, benchmark and cross-check Sum-of-Max partitions.
//
// Exit status: 0 success, 1 infeasible instance, 2 error.

#include "sompart/sompart.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sompart;

constexpr int kOk = 0, kInfeasible = 1, kFailure = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SolveArgs {
  std::string algo = "linear";
  std::string file;
  std::string catalog;
  bool transcript = false;
};

int run_solve(const SolveArgs& a) {
  const std::string text = slurp(a.file);
  if (a.algo == "tree-dp" || a.algo == "tree-brute") {
    const TreeFile tf = load_tree_file(text);
    CostValue cost;
    std::vector<std::size_t> cuts;
    if (a.algo == "tree-dp") {
      const auto r = solve_tree_dp(tf.tree);
      cost = r.cost;
      cuts = r.cut_nodes;
    } else {
      cost = solve_tree_exhaustive(tf.tree);
    }
    if (!cost.reachable()) {
      std::cout << "INFEASIBLE\n";
      if (tf.budget) std::cout << "NO\n";
      return kInfeasible;
    }
    std::cout << cost.value() << '\n';
    if (a.algo == "tree-dp") detail::write_list(std::cout, std::span<const std::size_t>(cuts));
    if (tf.budget) std::cout << (cost.value() <= *tf.budget ? "YES" : "NO") << '\n';
    return kOk;
  }

  const SequenceInstance inst = load_sequence_instance(text);
  if (a.algo == "assign") {
    if (a.catalog.empty()) throw Error("--algo assign needs --catalog FILE");
    std::istringstream cat_in(slurp(a.catalog));
    const AgentCatalog cat = read_agent_catalog(cat_in, inst.scores());
    const auto r = solve_assign(inst.weights(), cat);
    write_assign_result(std::cout, r);
    return r.feasible() ? kOk : kInfeasible;
  }

  const Algo algo = parse_algo(a.algo);
  if (a.transcript) {
    if (algo != Algo::Linear) throw Error("--transcript is only available with --algo linear");
    const auto rows = deque_transcript(inst);
    write_transcript(std::cout, rows);
  }
  const auto r = run_algo(algo, inst);
  write_partition_result(std::cout, r);
  return r.feasible() ? kOk : kInfeasible;
}

struct GenArgs {
  std::string kind = "special";
  std::size_t n = 10;
  std::uint64_t seed = 1;
};

int run_gen(const GenArgs& a) {
  write_sequence_instance(std::cout, generate(parse_case_kind(a.kind), a.n, a.seed));
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> algos{"linear", "heap"};
  std::vector<std::size_t> sizes;
  std::string kind = "special";
  std::size_t reps = 3;
  std::uint64_t seed = 1;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  BenchConfig cfg;
  for (const auto& s : a.algos) cfg.algos.push_back(parse_algo(s));
  if (cfg.algos.empty()) throw Error("bench: no algorithms selected");
  cfg.sizes = a.sizes.empty() ? default_size_ladder() : a.sizes;
  cfg.kind = parse_case_kind(a.kind);
  cfg.reps = a.reps;
  cfg.seed = a.seed;
  for (Algo algo : cfg.algos)
    for (std::size_t n : cfg.sizes)
      if (algo == Algo::Exhaustive && n > kExhaustiveSequenceLimit)
        throw Error("bench: exhaustive is limited to n <= " + std::to_string(kExhaustiveSequenceLimit));

  const auto records = bench(cfg);
  if (a.out.empty()) {
    write_bench_csv(std::cout, records);
    write_bench_summary(std::cerr, records, cfg.algos);
  } else {
    std::ofstream f(a.out);
    if (!f) throw Error("cannot write '" + a.out + "'");
    write_bench_csv(f, records);
    write_bench_summary(std::cout, records, cfg.algos);
  }
  return kOk;
}

struct CheckArgs {
  std::size_t n_max = 12;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
};

// Random instances with w in [0,4], s in [0,9], w0 in [0,12]; every solver
// must agree with the quadratic DP, and the exhaustive one joins in when the
// instance is small enough.
int run_check(const CheckArgs& a) {
  if (a.n_max < 1) throw Error("check: --n-max must be at least 1");
  std::mt19937_64 rng(a.seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::size_t feasible = 0;
  for (std::size_t t = 0; t < a.trials; ++t) {
    const auto n = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(a.n_max)));
    std::vector<Weight> w(n);
    std::vector<Score> s(n);
    for (auto& x : w) x = pick(0, 4);
    for (auto& x : s) x = pick(0, 9);
    const SequenceInstance inst(std::move(w), std::move(s), pick(0, 12));
    const auto ref = solve_naive(inst);
    std::vector<Algo> others{Algo::Heap, Algo::Linear};
    if (n <= kExhaustiveSequenceLimit) others.push_back(Algo::Exhaustive);
    for (Algo algo : others) {
      const auto r = run_algo(algo, inst);
      if (r.status != ref.status || (r.feasible() && (r.cost != ref.cost || !verify_partition(inst, r)))) {
        std::cerr << "mismatch: " << to_string(algo) << " vs naive on trial " << t << '\n';
        write_sequence_instance(std::cerr, inst);
        return kFailure;
      }
    }
    feasible += ref.feasible();
  }
  std::cout << "ok " << a.trials << " trials (" << feasible << " feasible)\n";
  return kOk;
}

struct ReduceArgs {
  std::string from = "ks";
  std::string file;
};

int run_reduce(const ReduceArgs& a) {
  const KnapsackInstance k = load_knapsack(slurp(a.file));
  if (a.from == "ks") {
    write_knapsack(std::cout, reduce_knapsack_to_knapsack2(k));
  } else {
    const TreeDecision d = reduce_knapsack2_to_tree(k);
    write_tree_file(std::cout, d.tree, d.budget);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-of-Max sequence and tree partition under a knapsack constraint"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* sc = app.add_subcommand("solve", "solve one instance file");
  sc->add_option("--algo", solve.algo, "exhaustive|naive|heap|linear|assign|tree-dp|tree-brute")
      ->check(CLI::IsMember({"exhaustive", "naive", "heap", "linear", "assign", "tree-dp", "tree-brute"}));
  sc->add_flag("--transcript", solve.transcript, "print the combined deque per position (linear, n <= 64)");
  sc->add_option("--catalog", solve.catalog, "agent catalog file for --algo assign");
  sc->add_option("file", solve.file, "instance file ('-' for stdin)")->required();

  GenArgs gen;
  auto* gc = app.add_subcommand("gen", "write a benchmark instance to stdout");
  gc->add_option("--kind", gen.kind)->check(CLI::IsMember({"special", "general"}));
  gc->add_option("--n", gen.n)->required()->check(CLI::PositiveNumber);
  gc->add_option("--seed", gen.seed);

  BenchArgs bargs;
  auto* bc = app.add_subcommand("bench", "time solvers on generated instances, CSV output");
  bc->add_option("--algos", bargs.algos, "comma-separated algorithms")->delimiter(',');
  bc->add_option("--sizes", bargs.sizes, "comma-separated n values (default: 25-point ladder 10..1e6)")
      ->delimiter(',');
  bc->add_option("--kind", bargs.kind)->check(CLI::IsMember({"special", "general"}));
  bc->add_option("--reps", bargs.reps);
  bc->add_option("--seed", bargs.seed);
  bc->add_option("--out", bargs.out, "CSV path (summary then goes to stdout)");

  CheckArgs check;
  auto* cc = app.add_subcommand("check", "differential fuzzing of the sequence solvers");
  cc->add_option("--n-max", check.n_max);
  cc->add_option("--trials", check.trials);
  cc->add_option("--seed", check.seed);

  ReduceArgs reduce;
  auto* rc = app.add_subcommand("reduce", "emit the reduced instance of a knapsack file");
  rc->add_option("--from", reduce.from)->check(CLI::IsMember({"ks", "ks2"}));
  rc->add_option("file", reduce.file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFailure;
  }

  try {
    if (*sc) return run_solve(solve);
    if (*gc) return run_gen(gen);
    if (*bc) return run_bench(bargs);
    if (*cc) return run_check(check);
    if (*rc) return run_reduce(reduce);
  } catch (const std::exception& e) {
    std::cerr << "sompart: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
