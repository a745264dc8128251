#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_problem_flags(CLI::App* app, symrec::cli::ProblemFlags& p) {
  app->add_option("--problem", p.problem, "Problem id")->capture_default_str();
  app->add_option("--n", p.n, "Size parameter")->capture_default_str();
  app->add_option("--k", p.k, "Colors, clause width, arity or clique size");
  app->add_option("--q", p.q, "CSP variable count");
  app->add_option("--d", p.d, "OV dimension");
  app->add_option("--alphabet", p.alphabet, "CSP alphabet size")->capture_default_str();
  app->add_option("--clause", p.clause, "CSP clause table as a 0/1 string");
}

void add_noise_flags(CLI::App* app, symrec::cli::NoiseFlags& f) {
  app->add_option("--delta", f.delta, "Corrupted fraction, e.g. 0.2 or 1/5")->capture_default_str();
  app->add_option("--seed", f.seed, "Corruption seed")->capture_default_str();
  app->add_option("--model", f.model, "exact or bernoulli")->capture_default_str();
  app->add_option("--strategy", f.strategy, "flip, uniform_wrong or constant:<d>")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace symrec::cli;
  CLI::App app{"Recovery reductions over corrupted truth tables"};
  app.require_subcommand(1);

  ProblemFlags problem;
  NoiseFlags noise;
  std::string out;
  std::string epsilon = "1/4";
  std::optional<std::uint64_t> sample_size;
  std::optional<std::uint64_t> instance;
  std::optional<std::string> graph;
  std::string input;
  unsigned parallelism = 1;
  unsigned k = 3;

  auto* table = app.add_subcommand("table", "Truth tables and masks");
  table->require_subcommand(1);
  auto* build = table->add_subcommand("build", "Build an exact truth table (STB1)");
  add_problem_flags(build, problem);
  build->add_option("--out", out, "Output file")->required();
  build->add_option("--parallelism", parallelism)->capture_default_str();

  std::string table_path;
  auto* corrupt = table->add_subcommand("corrupt", "Draw a corruption mask (SMK1) for a table");
  corrupt->add_option("--table", table_path, "STB1 file")->required();
  add_noise_flags(corrupt, noise);
  corrupt->add_option("--out", out, "Output mask file")->required();

  auto* recover = app.add_subcommand("recover", "Single-instance recovery");
  recover->require_subcommand(1);
  auto* one = recover->add_subcommand("one", "Recover one entry of a corrupted table");
  add_problem_flags(one, problem);
  add_noise_flags(one, noise);
  one->add_option("--instance", instance, "Instance index")->required();
  one->add_option("--epsilon", epsilon)->capture_default_str();
  one->add_option("--sample-size", sample_size, "Override the threshold s");

  auto* experiment = app.add_subcommand("experiment", "Batch experiments");
  experiment->require_subcommand(1);
  auto* run = experiment->add_subcommand("run", "Run trials and emit a report");
  std::optional<std::string> config_path;
  std::map<std::string, std::string> overrides;
  run->add_option("--config", config_path, "key = value config file");
  const std::pair<const char*, const char*> keys[] = {
      {"--problem", "problem"}, {"--n", "n"},         {"--k", "k"},
      {"--q", "q"},             {"--d", "d"},         {"--alphabet", "alphabet"},
      {"--clause", "clause"},   {"--delta", "delta"}, {"--epsilon", "epsilon"},
      {"--sample-size", "sample_size"}, {"--trials", "trials"}, {"--seed", "seed"},
      {"--model", "model"},     {"--strategy", "strategy"}, {"--parallelism", "parallelism"},
      {"--timing", "timing"},   {"--report", "report"}, {"--format", "format"}};
  for (const auto& [flag, key] : keys) {
    run->add_option_function<std::string>(
        flag, [&overrides, key = std::string(key)](const std::string& v) { overrides[key] = v; });
  }

  auto* aut = app.add_subcommand("aut", "Automorphism groups");
  aut->require_subcommand(1);
  auto* order = aut->add_subcommand("order", "Order of Aut(graph) or Aut(instance)");
  order->add_option("--graph", graph, "Graph text file");
  add_problem_flags(order, problem);
  order->add_option("--instance", instance, "Instance index");

  auto* cls = app.add_subcommand("classify", "Recognize the twelve highly symmetric graphs");
  std::string graph_path;
  cls->add_option("--graph", graph_path, "Graph text file")->required();
  cls->add_option("--k", k, "Clique size for the closed-form count")->capture_default_str();

  auto* ov = app.add_subcommand("ov", "Orthogonal Vectors");
  ov->require_subcommand(1);
  auto* ov_run_cmd = ov->add_subcommand("run", "Recover OV on one instance");
  ov_run_cmd->add_option("--input", input, "OV text file")->required();
  add_noise_flags(ov_run_cmd, noise);
  ov_run_cmd->add_option("--epsilon", epsilon)->capture_default_str();
  ov_run_cmd->add_option("--sample-size", sample_size, "Number of sampled permutations");

  auto* parity = app.add_subcommand("parity", "Parity of k-cliques");
  parity->require_subcommand(1);
  auto* parity_run_cmd = parity->add_subcommand("run", "Recover the k-clique parity of a graph");
  parity_run_cmd->add_option("--graph", graph_path, "Graph text file")->required();
  parity_run_cmd->add_option("--k", k)->capture_default_str();
  add_noise_flags(parity_run_cmd, noise);
  parity_run_cmd->add_option("--epsilon", epsilon)->capture_default_str();
  parity_run_cmd->add_option("--sample-size", sample_size, "Number of sampled permutations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return table_build(problem, out, parallelism);
    if (corrupt->parsed()) return table_corrupt(table_path, noise, out);
    if (one->parsed()) return recover_one(problem, *instance, noise, epsilon, sample_size);
    if (run->parsed()) return experiment_run(config_path, overrides);
    if (order->parsed()) return aut_order(graph, problem, instance);
    if (cls->parsed()) return classify(graph_path, k);
    if (ov_run_cmd->parsed()) return ov_run(input, noise, epsilon, sample_size);
    if (parity_run_cmd->parsed()) return parity_run(graph_path, k, noise, epsilon, sample_size);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
