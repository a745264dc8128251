#include "commands.hpp"

#include <symrec/experiment.hpp>
#include <symrec/finegrained.hpp>
#include <symrec/graph.hpp>
#include <symrec/recover.hpp>
#include <symrec/sicsaf.hpp>
#include <symrec/table_io.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace symrec::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemPtr build_problem(const ProblemFlags& f) {
  ProblemParams p;
  p.n = f.n;
  p.k = f.k;
  p.q = f.q;
  p.d = f.d;
  p.alphabet = f.alphabet;
  for (char c : f.clause) {
    if (c != '0' && c != '1') throw std::invalid_argument("--clause expects a 0/1 string");
    p.clause.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return make_problem(f.problem, p);
}

CorruptedTable corrupt_with(std::shared_ptr<const TruthTable> table, const NoiseFlags& f,
                            Value value_max) {
  return corrupt(std::move(table), Rational::parse(f.delta), f.seed, model_from_name(f.model),
                 strategy_from_name(f.strategy), value_max);
}

const char* branch_name(Branch b) { return b == Branch::Symmetric ? "symmetric" : "query"; }

}  // namespace

int table_build(const ProblemFlags& p, const std::string& out, unsigned parallelism) {
  const ProblemPtr problem = build_problem(p);
  const TruthTable table = build_table(*problem, parallelism);
  save_table(out, table);
  std::cout << "problem " << table.problem_key() << " n=" << table.n() << "\n"
            << "entries " << table.size() << "\n"
            << "width " << table.width() << "\n";
  return 0;
}

int table_corrupt(const std::string& table_path, const NoiseFlags& noise, const std::string& out) {
  const TruthTable table = load_table(table_path);
  const Rational delta = Rational::parse(noise.delta);
  MaskFile file;
  file.problem_key = table.problem_key();
  file.n = table.n();
  file.mask = model_from_name(noise.model) == CorruptionModel::ExactFraction
                  ? CorruptionMask::exact_fraction(table.size(), delta, noise.seed)
                  : CorruptionMask::bernoulli(table.size(), delta, noise.seed);
  save_mask(out, file);
  std::cout << "entries " << table.size() << "\n"
            << "corrupted " << *file.mask.count() << "\n";
  return 0;
}

int recover_one(const ProblemFlags& p, std::uint64_t instance, const NoiseFlags& noise,
                const std::string& epsilon, std::optional<std::uint64_t> sample_size) {
  const ProblemPtr problem = build_problem(p);
  auto table = std::make_shared<const TruthTable>(build_table(*problem));
  const CorruptedTable corrupted = corrupt_with(table, noise, problem->value_max());
  RecoveryConfig config;
  config.epsilon = Rational::parse(epsilon);
  config.sample_size_override = sample_size;
  const RecoveryOutcome o = recover_one(*problem, instance, corrupted, config);
  std::cout << "value " << o.value << "\n"
            << "truth " << table->get(instance) << "\n"
            << "branch " << branch_name(o.branch) << "\n"
            << "aut_order " << o.aut_order << "\n"
            << "s " << recovery_threshold(*problem, config) << "\n"
            << "queries " << o.queries_made << "\n";
  if (o.majority_margin) std::cout << "margin " << o.majority_margin->to_string() << "\n";
  return o.value == table->get(instance) ? 0 : 1;
}

int experiment_run(const std::optional<std::string>& config_path,
                   const std::map<std::string, std::string>& overrides) {
  const ExperimentConfig config = parse_config(config_path, overrides);
  const ExperimentReport report = run_experiment(config);
  emit_report(report, report_format_from_name(config.format), config.report);
  return 0;
}

int aut_order(const std::optional<std::string>& graph_path, const ProblemFlags& p,
              std::optional<std::uint64_t> instance) {
  if (graph_path) {
    const GraphInstance g = GraphInstance::parse(slurp(*graph_path));
    SubgroupOracle oracle;
    oracle.accepts = [&g](const Permutation& pi) { return g.relabeled(pi) == g; };
    oracle.prefix_ok = [&g](std::span<const Point> img) {
      const unsigned last = static_cast<unsigned>(img.size()) - 1;
      for (unsigned i = 0; i < last; ++i) {
        if (g.has_edge(i, last) != g.has_edge(img[i], img[last])) return false;
      }
      return true;
    };
    const StabilizerChain chain = aut_group(oracle, g.n(), AutStrategy::Backtracking);
    std::cout << chain.order() << "\n";
    return 0;
  }
  if (!instance) throw std::invalid_argument("aut order needs --graph or --instance");
  const ProblemPtr problem = build_problem(p);
  std::cout << automorphism_group(*problem, *instance).order() << "\n";
  return 0;
}

int classify(const std::string& graph_path, unsigned k) {
  const GraphInstance g = GraphInstance::parse(slurp(graph_path));
  const GraphFamily f = classify_graph(g);
  std::cout << "family " << family_name(f) << "\n";
  if (f.kind != FamilyKind::Other) {
    std::cout << "aut_order " << aut_order_closed_form(f, g.n()) << "\n";
    if (k >= 3) {
      std::cout << "k " << k << "\n"
                << "k_cliques " << count_k_cliques_special(f, g.n(), k) << "\n";
    }
  }
  return 0;
}

int ov_run(const std::string& input, const NoiseFlags& noise, const std::string& epsilon,
           std::optional<std::uint64_t> samples) {
  const OVInstance v = OVInstance::parse(slurp(input));
  ProblemParams params;
  params.n = v.n;
  params.d = v.d;
  const ProblemPtr problem = make_problem("ov", params);
  auto table = std::make_shared<const TruthTable>(build_table(*problem));
  const CorruptedTable corrupted = corrupt_with(table, noise, 1);
  const std::uint64_t s = samples ? *samples : default_samples(v.n, Rational::parse(epsilon));
  const FineOutcome o = ov_solve(v, *problem, corrupted, s, noise.seed);
  std::cout << "answer " << (o.value ? 1 : 0) << "\n"
            << "bruteforce " << (ov_bruteforce(v) ? 1 : 0) << "\n"
            << "path " << (o.shortcut ? "shortcut" : "sampled") << "\n"
            << "samples " << s << "\n"
            << "queries " << o.queries << "\n";
  return 0;
}

int parity_run(const std::string& graph_path, unsigned k, const NoiseFlags& noise,
               const std::string& epsilon, std::optional<std::uint64_t> samples) {
  const GraphInstance g = GraphInstance::parse(slurp(graph_path));
  ProblemParams params;
  params.n = g.n();
  params.k = k;
  const ProblemPtr problem = make_problem("parity_kclique", params);
  auto table = std::make_shared<const TruthTable>(build_table(*problem));
  const CorruptedTable corrupted = corrupt_with(table, noise, 1);
  const std::uint64_t s = samples ? *samples : default_samples(g.n(), Rational::parse(epsilon));
  const FineOutcome o = parity_kclique_recover(g, k, *problem, corrupted, s, noise.seed);
  std::cout << "parity " << (o.value ? 1 : 0) << "\n"
            << "bruteforce " << (count_k_cliques(g, k) & 1u) << "\n"
            << "path " << (o.shortcut ? "classifier" : "sampled") << "\n"
            << "samples " << s << "\n"
            << "queries " << o.queries << "\n";
  return 0;
}

}  // namespace symrec::cli
