#include "symrec/experiment.hpp"

#include "symrec/finegrained.hpp"

#include "parallel.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symrec {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "problem", "n",      "k",      "q",       "d",        "alphabet",    "clause",
      "delta",   "epsilon", "sample_size", "trials", "seed", "model", "strategy",
      "parallelism", "timing", "report", "format"};
  return keys;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(value, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (value.empty() || used != value.size()) {
    throw std::invalid_argument(key + ": expected a non-negative integer, got '" + value + "'");
  }
  return v;
}

unsigned parse_unsigned(const std::string& key, const std::string& value) {
  const std::uint64_t v = parse_u64(key, value);
  if (v > 1u << 20) throw std::invalid_argument(key + ": value too large");
  return static_cast<unsigned>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw std::invalid_argument(key + ": expected a boolean, got '" + value + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_fine_grained(const std::string& id) { return id == "ov" || id == "parity_kclique"; }

}  // namespace

void ExperimentConfig::validate() const {
  bool known = false;
  for (const auto& id : problem_ids()) known |= id == problem;
  if (!known) throw std::invalid_argument("problem: unknown id '" + problem + "'");
  if (trials < 1) throw std::invalid_argument("trials: must be at least 1");
  if (!(delta < Rational(1, 2))) {
    throw std::invalid_argument("delta: must be below 1/2, got " + delta.to_string());
  }
  if (epsilon.num == 0 || !(epsilon < Rational(1, 2))) {
    throw std::invalid_argument("epsilon: must lie in (0, 1/2), got " + epsilon.to_string());
  }
  if (sample_size && *sample_size == 0) throw std::invalid_argument("sample_size: must be >= 1");
  if (parallelism < 1) throw std::invalid_argument("parallelism: must be at least 1");
  if (format != "json" && format != "csv") {
    throw std::invalid_argument("format: expected json or csv, got '" + format + "'");
  }
}

void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& value) {
  if (!known_keys().count(key)) throw std::invalid_argument("unknown key '" + key + "'");
  if (key == "problem") {
    c.problem = value;
  } else if (key == "n") {
    c.params.n = parse_unsigned(key, value);
  } else if (key == "k") {
    c.params.k = parse_unsigned(key, value);
  } else if (key == "q") {
    c.params.q = parse_unsigned(key, value);
  } else if (key == "d") {
    c.params.d = parse_unsigned(key, value);
  } else if (key == "alphabet") {
    c.params.alphabet = parse_unsigned(key, value);
  } else if (key == "clause") {
    c.params.clause.clear();
    for (char ch : value) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("clause: expected a 0/1 string");
      c.params.clause.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  } else if (key == "delta") {
    c.delta = Rational::parse(value);
  } else if (key == "epsilon") {
    c.epsilon = Rational::parse(value);
  } else if (key == "sample_size") {
    if (value == "formula" || value.empty()) {
      c.sample_size.reset();
    } else {
      c.sample_size = parse_u64(key, value);
    }
  } else if (key == "trials") {
    c.trials = parse_u64(key, value);
  } else if (key == "seed") {
    c.seed = parse_u64(key, value);
  } else if (key == "model") {
    c.model = model_from_name(value);
  } else if (key == "strategy") {
    c.strategy = strategy_from_name(value);
  } else if (key == "parallelism") {
    c.parallelism = parse_unsigned(key, value);
  } else if (key == "timing") {
    c.timing = parse_bool(key, value);
  } else if (key == "report") {
    c.report = value;
  } else if (key == "format") {
    c.format = value;
  }
}

std::vector<ConfigEntry> parse_config_text(const std::string& text, const std::string& origin) {
  std::vector<ConfigEntry> out;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  unsigned line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = origin + ":" + std::to_string(line) + ": ";
    if (eq == std::string::npos) throw std::invalid_argument(where + "expected key = value");
    ConfigEntry e{line, trim(body.substr(0, eq)), trim(body.substr(eq + 1))};
    if (!known_keys().count(e.key)) throw std::invalid_argument(where + "unknown key '" + e.key + "'");
    if (!seen.insert(e.key).second) throw std::invalid_argument(where + "duplicate key '" + e.key + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ConfigEntry> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

ExperimentConfig parse_config(const std::optional<std::string>& path,
                              const std::map<std::string, std::string>& overrides) {
  ExperimentConfig c;
  if (path) {
    for (const ConfigEntry& e : read_config_file(*path)) {
      try {
        apply_setting(c, e.key, e.value);
      } catch (const std::invalid_argument& err) {
        throw std::invalid_argument(*path + ":" + std::to_string(e.line) + ": " + err.what());
      }
    }
  }
  for (const auto& [k, v] : overrides) apply_setting(c, k, v);
  c.validate();
  return c;
}

std::vector<std::pair<std::string, std::string>> config_echo(const ExperimentConfig& c) {
  std::string clause;
  for (auto b : c.params.clause) clause.push_back(static_cast<char>('0' + b));
  return {
      {"problem", c.problem},
      {"n", std::to_string(c.params.n)},
      {"k", std::to_string(c.params.k)},
      {"q", std::to_string(c.params.q)},
      {"d", std::to_string(c.params.d)},
      {"alphabet", std::to_string(c.params.alphabet)},
      {"clause", clause},
      {"delta", c.delta.to_string()},
      {"epsilon", c.epsilon.to_string()},
      {"sample_size", c.sample_size ? std::to_string(*c.sample_size) : "formula"},
      {"trials", std::to_string(c.trials)},
      {"seed", std::to_string(c.seed)},
      {"model", model_name(c.model)},
      {"strategy", strategy_name(c.strategy)},
  };
}

void ExperimentReport::recompute_aggregate(std::uint64_t entries, Rational delta,
                                           std::uint64_t s) {
  std::uint64_t total = 0;
  std::uint64_t correct = 0;
  std::uint64_t perfect = 0;
  for (const TrialRecord& t : trials) {
    total += t.total;
    correct += t.correct;
    perfect += t.correct == t.total ? 1 : 0;
  }
  instance_success_rate = total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
  trial_all_correct_rate =
      trials.empty() ? 0.0 : static_cast<double>(perfect) / static_cast<double>(trials.size());
  const double gap = 0.5 - delta.to_double();
  theoretical_bound =
      static_cast<double>(entries) * std::exp(-gap * gap * static_cast<double>(s) / 8.0);
  bound_vacuous = theoretical_bound > 1.0;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const ProblemPtr problem = make_problem(config.problem, config.params);
  const std::uint64_t entries = problem->instance_count();
  auto truth = std::make_shared<const TruthTable>(build_table(*problem, config.parallelism));

  std::vector<CorruptedTable> tables;
  tables.reserve(config.trials);
  ExperimentReport report;
  report.config = config_echo(config);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const std::uint64_t seed = trial_seed(config.seed, t);
    CorruptionMask mask = config.model == CorruptionModel::ExactFraction
                              ? CorruptionMask::exact_fraction(entries, config.delta, seed)
                              : CorruptionMask::bernoulli(entries, config.delta, seed);
    TrialRecord rec;
    rec.seed = seed;
    rec.corrupted = *mask.count();
    report.trials.push_back(rec);
    tables.emplace_back(truth, std::move(mask), config.strategy, problem->value_max());
  }

  std::uint64_t s = 0;
  std::vector<RecoverySummary> sums(config.trials);
  if (is_fine_grained(config.problem)) {
    s = config.sample_size ? *config.sample_size : default_samples(problem->n(), config.epsilon);
    const unsigned n = problem->n();
    const unsigned k = problem->params().k;
    constexpr std::uint64_t kChunk = 1024;
    const std::uint64_t chunks = (entries + kChunk - 1) / kChunk;
    std::vector<std::vector<RecoverySummary>> partial(
        chunks, std::vector<RecoverySummary>(config.trials));
    detail::parallel_chunks(chunks, config.parallelism, [&](std::uint64_t c) {
      const std::uint64_t hi = std::min(entries, (c + 1) * kChunk);
      for (InstanceIndex phi = c * kChunk; phi < hi; ++phi) {
        const Value expected = truth->get(phi);
        for (std::uint64_t t = 0; t < config.trials; ++t) {
          RecoverySummary& r = partial[c][t];
          const std::uint64_t inst_seed = splitmix64(report.trials[t].seed ^ splitmix64(phi));
          ++r.total;
          try {
            const FineOutcome o =
                config.problem == "ov"
                    ? ov_solve(OVInstance::from_index(n, problem->params().d, phi), *problem,
                               tables[t], s, inst_seed)
                    : parity_kclique_recover(GraphInstance::from_bits(n, phi), k, *problem,
                                             tables[t], s, inst_seed);
            ++(o.shortcut ? r.symmetric : r.query_branch);
            r.queries += o.queries;
            if (static_cast<Value>(o.value) == expected) ++r.correct;
          } catch (const MajorityUndefined&) {
            ++r.query_branch;
            r.queries += s;
            ++r.majority_undefined;
          }
        }
      }
    });
    for (const auto& p : partial) {
      for (std::uint64_t t = 0; t < config.trials; ++t) sums[t] += p[t];
    }
  } else {
    RecoveryConfig rc;
    rc.epsilon = config.epsilon;
    rc.sample_size_override = config.sample_size;
    s = recovery_threshold(*problem, rc);
    std::vector<const CorruptedTable*> ptrs;
    for (const auto& t : tables) ptrs.push_back(&t);
    sums = recover_all_multi(*problem, ptrs, *truth, rc, config.parallelism);
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    TrialRecord& rec = report.trials[t];
    rec.total = sums[t].total;
    rec.symmetric = sums[t].symmetric;
    rec.query_branch = sums[t].query_branch;
    rec.correct = sums[t].correct;
    rec.majority_undefined = sums[t].majority_undefined;
    rec.queries = sums[t].queries;
    rec.ms = config.timing ? static_cast<std::uint64_t>(elapsed) / config.trials : 0;
  }
  report.config.emplace_back("s", std::to_string(s));
  report.recompute_aggregate(entries, config.delta, s);
  return report;
}

}  // namespace symrec
