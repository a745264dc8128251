#include "symrec/experiment.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symrec {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kTrialKeys[] = {"seed",    "corrupted",          "total",
                                      "symmetric", "query_branch",     "correct",
                                      "majority_undefined", "queries", "ms"};

std::uint64_t* field(TrialRecord& t, std::size_t i) {
  std::uint64_t* fields[] = {&t.seed,    &t.corrupted,          &t.total,
                             &t.symmetric, &t.query_branch,     &t.correct,
                             &t.majority_undefined, &t.queries, &t.ms};
  return fields[i];
}

}  // namespace

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string render_report(const ExperimentReport& report, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (TrialRecord t : report.trials) {
      for (std::size_t i = 0; i < std::size(kTrialKeys); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(*field(t, i));
      }
      out.push_back('\n');
    }
    return out;
  }
  ojson doc;
  ojson config = ojson::object();
  for (const auto& [k, v] : report.config) config[k] = v;
  doc["config"] = config;
  ojson trials = ojson::array();
  for (TrialRecord t : report.trials) {
    ojson row;
    for (std::size_t i = 0; i < std::size(kTrialKeys); ++i) row[kTrialKeys[i]] = *field(t, i);
    trials.push_back(row);
  }
  doc["trials"] = trials;
  doc["aggregate"] = {{"instance_success_rate", report.instance_success_rate},
                      {"trial_all_correct_rate", report.trial_all_correct_rate},
                      {"theoretical_bound", report.theoretical_bound},
                      {"bound_vacuous", report.bound_vacuous}};
  return doc.dump(2) + "\n";
}

void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path) {
  const std::string text = render_report(report, format);
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

ExperimentReport parse_json_report(const std::string& text) {
  const ojson doc = ojson::parse(text);
  ExperimentReport r;
  for (const auto& [k, v] : doc.at("config").items()) r.config.emplace_back(k, v.get<std::string>());
  for (const auto& row : doc.at("trials")) {
    TrialRecord t;
    for (std::size_t i = 0; i < std::size(kTrialKeys); ++i) {
      *field(t, i) = row.at(kTrialKeys[i]).get<std::uint64_t>();
    }
    r.trials.push_back(t);
  }
  const auto& agg = doc.at("aggregate");
  r.instance_success_rate = agg.at("instance_success_rate").get<double>();
  r.trial_all_correct_rate = agg.at("trial_all_correct_rate").get<double>();
  r.theoretical_bound = agg.at("theoretical_bound").get<double>();
  r.bound_vacuous = agg.at("bound_vacuous").get<bool>();
  return r;
}

std::vector<TrialRecord> parse_csv_trials(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("csv report: unexpected header");
  }
  std::vector<TrialRecord> out;
  unsigned lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    TrialRecord t;
    std::size_t i = 0;
    while (std::getline(cells, cell, ',')) {
      if (i >= std::size(kTrialKeys)) break;
      try {
        *field(t, i) = std::stoull(cell);
      } catch (const std::exception&) {
        throw std::invalid_argument("csv report line " + std::to_string(lineno) + ": bad cell");
      }
      ++i;
    }
    if (i != std::size(kTrialKeys)) {
      throw std::invalid_argument("csv report line " + std::to_string(lineno) +
                                  ": wrong column count");
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace symrec
