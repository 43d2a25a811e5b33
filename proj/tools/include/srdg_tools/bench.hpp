#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "srdg_tools/engines.hpp"

namespace srdg::tools {

struct BenchOptions {
  std::vector<std::string> engines{"auto"};
  unsigned repetitions = 1;
  unsigned jobs = 1;
  bool min_slack = false;
  /// Adds the LP relaxation of the min-slack model; needs a backend.
  bool relaxation = false;
  EngineRequest request;
};

struct BenchRecord {
  std::string instance;
  std::string constellation;
  std::string engine;
  unsigned repetition = 0;
  bool ok = true;
  std::string verdict;
  std::optional<Time> d_star;
  double seconds = 0;
  std::optional<double> relaxed_d_star;
  std::optional<double> ratio;
  std::string error;
};

/// File stem minus a trailing "_<replicate>" suffix.
std::string constellation_of(const std::string& instance_name);

/// Instance files (*.json, sidecars excluded) under dir, sorted by name.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

/// Records sorted by (instance, engine, repetition) regardless of scheduling.
std::vector<BenchRecord> run_bench(const std::vector<std::filesystem::path>& files, const BenchOptions& options);

std::string records_csv(const std::vector<BenchRecord>& records);

/// Per engine: median and mean of the wall time per constellation, then the
/// mean over constellations; plus relaxation-ratio statistics.
std::string summary_csv(const std::vector<BenchRecord>& records);

struct Stats {
  double mean = 0;
  double std = 0;
  double median = 0;
};

Stats describe_sample(std::vector<double> values);

}  // namespace srdg::tools
