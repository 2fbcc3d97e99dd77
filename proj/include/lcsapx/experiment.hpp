#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcsapx/generate.hpp"
#include "lcsapx/multi_solver.hpp"
#include "lcsapx/oracles.hpp"
#include "lcsapx/report.hpp"

namespace lcsapx {

enum class Algorithm { bm, binary, imbalanced, equal, reduce, automatic, exact };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

struct AlgorithmRun {
  Candidate answer;
  std::vector<Candidate> candidates;
  std::string path;
  ConstantSchedule schedule;
};

// `schedule` empty means derived for the alphabet size and ed.ratio.
AlgorithmRun run_algorithm(Algorithm algorithm, const SymbolString& a, const SymbolString& b,
                           const std::optional<ConstantSchedule>& schedule,
                           const EdApproximator& ed, std::size_t max_cells = kDefaultMaxCells);

struct ExperimentConfig {
  std::vector<InstanceSpec> instances;  // one entry per instance, counts expanded
  std::vector<Algorithm> algorithms;
  std::size_t max_cells = kDefaultMaxCells;
  std::size_t threads = 1;
  bool timing = false;
  std::optional<ConstantSchedule> schedule;
};

InstanceSpec spec_from_json(const Json& j);
Json spec_to_json(const InstanceSpec& spec);
ExperimentConfig parse_experiment_config(const Json& j);

struct ReportRecord {
  std::size_t instance = 0;
  InstanceSpec spec;
  Algorithm algorithm = Algorithm::bm;
  std::size_t length = 0;
  std::optional<std::size_t> exact;
  std::optional<double> ratio;
  std::optional<double> wall_time_ms;
  std::vector<std::pair<std::string, std::size_t>> candidates;
  std::string path;
  std::string schedule_digest;
  std::optional<bool> upper_bound_ok;  // binary instances meeting the closeness hypothesis
};

/*
 * Runs every algorithm on every instance. Records come back in instance
 * order, then algorithm order, whatever the thread count. Invalid
 * witnesses and ratio-floor violations abort the run.
 */
std::vector<ReportRecord> run_experiment(const ExperimentConfig& config);

Json record_to_json(const ReportRecord& record);
std::string records_to_jsonl(const std::vector<ReportRecord>& records);
std::string records_to_csv(const std::vector<ReportRecord>& records);

}  // namespace lcsapx
