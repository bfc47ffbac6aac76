#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "kcert/lemmas.hpp"

namespace kcert {

inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Json, Markdown };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> tasks{"all"};  // lemma ids, fixture names, or "all"
  int sample_count = 100;
  Rational isolation_width{1, 1073741824};
  int jobs = 1;
  OutputFormat format = OutputFormat::Json;
  std::filesystem::path fixtures_dir;
  std::uint64_t seed = kDefaultSeed;
  bool no_timing = false;

  /// Throws ConfigError when sample_count < 1, width <= 0, jobs < 1 or a task is unknown.
  void validate() const;
  RunOptions options() const;
};

/// Overlays the keys present in a JSON config file onto `base`.
RunConfig load_config(const std::filesystem::path& path, RunConfig base);

struct Report {
  RunConfig config;
  std::vector<LemmaReport> lemmas;
  std::vector<FixtureCheck> fixtures;
  Status aggregate = Status::Pass;
  double total_seconds = 0;
};

/// Expands "all" and runs every task on a pool of config.jobs workers. The
/// result order follows lemma_ids() and fixture_names(), not completion order.
Report run_tasks(const RunConfig& config);

/// PASS iff every lemma is PASS or NOTE and every fixture check passes.
Status aggregate_of(const std::vector<LemmaReport>& lemmas, const std::vector<FixtureCheck>& fixtures);

Json report_json(const Report& report);
std::string emit_report(const Report& report, OutputFormat format);

/// Keeps the first `max_terms` terms of a polynomial rendering and appends
/// "…(N more terms)" when some were dropped.
std::string truncate_terms(const std::string& text, std::size_t max_terms = 40);

}  // namespace kcert
