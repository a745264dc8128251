#pragma once

#include "symrec/noise.hpp"
#include "symrec/problem.hpp"
#include "symrec/rational.hpp"
#include "symrec/recover.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symrec {

struct ExperimentConfig {
  std::string problem = "clique";
  ProblemParams params;
  Rational delta{0, 1};
  Rational epsilon{1, 4};
  std::optional<std::uint64_t> sample_size;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  CorruptionModel model = CorruptionModel::ExactFraction;
  CorruptionStrategy strategy = CorruptionStrategy::flip();
  unsigned parallelism = 1;
  bool timing = false;
  std::string report;
  std::string format = "json";

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

// Applies one key = value setting. Throws std::invalid_argument for unknown
// keys or bad values.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

struct ConfigEntry {
  unsigned line = 0;
  std::string key;
  std::string value;
};

// Parses UTF-8 "key = value" lines with # comments. Errors name the line.
std::vector<ConfigEntry> parse_config_text(const std::string& text, const std::string& origin);
std::vector<ConfigEntry> read_config_file(const std::string& path);

// File settings first, then overrides (typically command-line flags).
ExperimentConfig parse_config(const std::optional<std::string>& path,
                              const std::map<std::string, std::string>& overrides);

std::vector<std::pair<std::string, std::string>> config_echo(const ExperimentConfig& config);

struct TrialRecord {
  std::uint64_t seed = 0;
  std::uint64_t corrupted = 0;
  std::uint64_t total = 0;
  std::uint64_t symmetric = 0;
  std::uint64_t query_branch = 0;
  std::uint64_t correct = 0;
  std::uint64_t majority_undefined = 0;
  std::uint64_t queries = 0;
  std::uint64_t ms = 0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ExperimentReport {
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<TrialRecord> trials;
  double instance_success_rate = 0;
  double trial_all_correct_rate = 0;
  // Union bound N * exp(-(1/2 - delta)^2 s / 8) for the s actually used.
  double theoretical_bound = 0;
  bool bound_vacuous = false;

  void recompute_aggregate(std::uint64_t entries, Rational delta, std::uint64_t s);
};

ExperimentReport run_experiment(const ExperimentConfig& config);

enum class ReportFormat { Json, Csv };
ReportFormat report_format_from_name(const std::string& name);

std::string render_report(const ExperimentReport& report, ReportFormat format);
void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path);

// Parses JSON produced by render_report.
ExperimentReport parse_json_report(const std::string& text);
// Parses the per-trial rows of a CSV report.
std::vector<TrialRecord> parse_csv_trials(const std::string& text);

inline constexpr const char* kCsvHeader =
    "seed,corrupted,total,symmetric,query_branch,correct,majority_undefined,queries,ms";

}  // namespace symrec
