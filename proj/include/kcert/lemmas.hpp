#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kcert/certify.hpp"
#include "kcert/fixture.hpp"
#include "kcert/functional.hpp"
#include "kcert/sampler.hpp"

namespace kcert {

struct RunOptions {
  int sample_count = 100;
  Rational isolation_width{1, 1073741824};  // 2^-30
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path fixtures_dir;
};

/// Lazily built shared objects; every accessor is safe to call from several
/// worker threads and computes its value once.
class Workspace {
 public:
  explicit Workspace(RunOptions options);

  const RunOptions& options() const { return options_; }
  const FunctionalBundle& bundle(ChartId chart);
  const DiagonalRestriction& diagonal();
  /// Second derivative of calA along the convexity direction of the chart.
  const RatFunc& second_derivative(ChartId chart);
  const FixtureFile& fixture(const std::string& name);

 private:
  template <class T>
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<T> value;
  };

  RunOptions options_;
  Lazy<FunctionalBundle> k2_, k3_;
  Lazy<DiagonalRestriction> diagonal_;
  Lazy<RatFunc> d2_k2_, d2_k3_;
  std::map<std::string, Lazy<FixtureFile>> fixtures_;
};

std::vector<int> convexity_direction(ChartId chart);

const std::vector<std::string>& lemma_ids();
bool is_lemma_id(const std::string& id);
/// Runs one lemma; unknown ids throw std::invalid_argument.
LemmaReport run_lemma(const std::string& id, Workspace& ws);

struct FixtureCheck {
  std::string name;
  std::string path;  // relative to the fixtures directory
  ComparisonVerdict verdict;
  std::optional<Rational> expected_constant;
  bool pass = false;
};

const std::vector<std::string>& fixture_names();
FixtureCheck check_fixture(const std::string& name, Workspace& ws);
Json to_json(const FixtureCheck& fc);

/// Critical point of the diagonal restriction, as produced by the k = 2 uniqueness lemma.
struct CriticalInterval {
  RootInterval beta;
  Rational calA_lo, calA_hi;  // enclosure of F(beta*)
};
CriticalInterval k2_critical_interval(Workspace& ws, const Rational& width);

}  // namespace kcert
