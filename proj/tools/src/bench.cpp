#include "srdg_tools/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "srdg/io.hpp"
#include "srdg/milp.hpp"

namespace srdg::tools {

std::string constellation_of(const std::string& instance_name) {
  const auto cut = instance_name.rfind('_');
  if (cut == std::string::npos || cut + 1 == instance_name.size()) return instance_name;
  const bool digits = std::all_of(instance_name.begin() + static_cast<std::ptrdiff_t>(cut) + 1, instance_name.end(),
                                  [](unsigned char c) { return std::isdigit(c); });
  return digits ? instance_name.substr(0, cut) : instance_name;
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto& p = entry.path();
    if (!entry.is_regular_file() || p.extension() != ".json") continue;
    if (p.stem().extension() == ".expected") continue;
    files.push_back(p);
  }
  std::sort(files.begin(), files.end());
  return files;
}

Stats describe_sample(std::vector<double> values) {
  Stats s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double sq = 0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.std = values.size() > 1 ? std::sqrt(sq / (n - 1)) : 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  s.median = values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
  return s;
}

namespace {

struct Job {
  std::size_t file;
  std::size_t engine;
  unsigned repetition;
};

BenchRecord run_one(const std::filesystem::path& file, const std::string& engine, unsigned repetition,
                    const BenchOptions& options) {
  BenchRecord rec;
  rec.instance = file.stem().string();
  rec.constellation = constellation_of(rec.instance);
  rec.engine = engine;
  rec.repetition = repetition;
  try {
    const Instance instance = parse_instance(read_text_file(file));
    EngineRequest request = options.request;
    request.engine = engine;
    request.min_slack = options.min_slack || options.relaxation;
    rec.engine = resolve_engine(instance, request);
    const auto start = std::chrono::steady_clock::now();
    const EngineResult result = run_engine(instance, request);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rec.verdict = std::string(to_string(result.verdict));
    rec.d_star = result.d_star;
    if (options.relaxation) {
      if (!options.request.backend) throw std::runtime_error("relaxation needs a MILP backend");
      const MilpModel model = build_milp(instance, MilpMode::min_slack, MilpOptions{options.request.presolve, options.request.time_indexed});
      const double relaxed = std::max(0.0, solve_relaxation(model, *options.request.backend));
      rec.relaxed_d_star = relaxed;
      rec.ratio = *result.d_star == 0 ? 1.0 : relaxed / *result.d_star;
    }
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
  }
  return rec;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<std::filesystem::path>& files, const BenchOptions& options) {
  std::vector<Job> jobs;
  for (std::size_t f = 0; f < files.size(); ++f)
    for (std::size_t e = 0; e < options.engines.size(); ++e)
      for (unsigned r = 0; r < options.repetitions; ++r) jobs.push_back({f, e, r});

  std::vector<BenchRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++)
      records[j] = run_one(files[jobs[j].file], options.engines[jobs[j].engine], jobs[j].repetition, options);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.instance, a.engine, a.repetition) < std::tie(b.instance, b.engine, b.repetition);
  });
  return records;
}

std::string records_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance,constellation,engine,repetition,status,verdict,d_star,seconds,relaxed_d_star,ratio,error\n";
  for (const auto& r : records) {
    out << csv_field(r.instance) << ',' << csv_field(r.constellation) << ',' << r.engine << ',' << r.repetition << ','
        << (r.ok ? "ok" : "error") << ',' << r.verdict << ',' << (r.d_star ? std::to_string(*r.d_star) : "") << ','
        << fixed(r.seconds) << ',' << (r.relaxed_d_star ? fixed(*r.relaxed_d_star) : "") << ','
        << (r.ratio ? fixed(*r.ratio) : "") << ',' << csv_field(r.error) << '\n';
  }
  return out.str();
}

std::string summary_csv(const std::vector<BenchRecord>& records) {
  // engine -> constellation -> times
  std::map<std::string, std::map<std::string, std::vector<double>>> times;
  std::map<std::string, std::vector<double>> ratios;
  std::map<std::string, std::size_t> failures;
  for (const auto& r : records) {
    if (!r.ok) {
      ++failures[r.engine];
      continue;
    }
    times[r.engine][r.constellation].push_back(r.seconds);
    if (r.ratio) ratios[r.engine].push_back(*r.ratio);
  }
  std::ostringstream out;
  out << "engine,constellation,runs,failures,median_seconds,mean_seconds,ratio_mean,ratio_std,ratio_median\n";
  for (const auto& [engine, by_const] : times) {
    std::vector<double> medians, means;
    std::size_t runs = 0;
    for (const auto& [constellation, sample] : by_const) {
      const Stats s = describe_sample(sample);
      medians.push_back(s.median);
      means.push_back(s.mean);
      runs += sample.size();
      out << engine << ',' << csv_field(constellation) << ',' << sample.size() << ",," << fixed(s.median) << ','
          << fixed(s.mean) << ",,,\n";
    }
    const double mom = describe_sample(medians).mean;
    const double mem = describe_sample(means).mean;
    out << engine << ",ALL," << runs << ',' << failures[engine] << ',' << fixed(mom) << ',' << fixed(mem) << ',';
    if (auto it = ratios.find(engine); it != ratios.end() && !it->second.empty()) {
      const Stats s = describe_sample(it->second);
      out << fixed(s.mean, 3) << ',' << fixed(s.std, 3) << ',' << fixed(s.median, 3);
    } else {
      out << ",,";
    }
    out << '\n';
  }
  for (const auto& [engine, count] : failures)
    if (!times.contains(engine)) out << engine << ",ALL,0," << count << ",,,,,\n";
  return out.str();
}

}  // namespace srdg::tools
