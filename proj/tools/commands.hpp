#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace symrec::cli {

struct ProblemFlags {
  std::string problem = "clique";
  unsigned n = 4;
  unsigned k = 0;
  unsigned q = 0;
  unsigned d = 0;
  unsigned alphabet = 2;
  std::string clause;
};

struct NoiseFlags {
  std::string delta = "0";
  std::uint64_t seed = 1;
  std::string model = "exact";
  std::string strategy = "flip";
};

int table_build(const ProblemFlags& p, const std::string& out, unsigned parallelism);
int table_corrupt(const std::string& table_path, const NoiseFlags& noise, const std::string& out);
int recover_one(const ProblemFlags& p, std::uint64_t instance, const NoiseFlags& noise,
                const std::string& epsilon, std::optional<std::uint64_t> sample_size);
int experiment_run(const std::optional<std::string>& config,
                   const std::map<std::string, std::string>& overrides);
int aut_order(const std::optional<std::string>& graph_path, const ProblemFlags& p,
              std::optional<std::uint64_t> instance);
int classify(const std::string& graph_path, unsigned k);
int ov_run(const std::string& input, const NoiseFlags& noise, const std::string& epsilon,
           std::optional<std::uint64_t> samples);
int parity_run(const std::string& graph_path, unsigned k, const NoiseFlags& noise,
               const std::string& epsilon, std::optional<std::uint64_t> samples);

}  // namespace symrec::cli
