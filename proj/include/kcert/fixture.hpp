#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcert/ratfunc.hpp"

namespace kcert {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixtureFile {
  std::string name;
  Variables variables;
  std::string numerator_text;
  std::string denominator_text = "1";
  std::string provenance;
  RatFunc value;
};

/// Parses the `[meta]` / `[numerator]` / `[denominator]` layout. When
/// `target` is given the fixture's symbols are embedded into that variable list.
FixtureFile parse_fixture(const std::string& content, const std::string& origin,
                          const std::optional<Variables>& target = std::nullopt);
FixtureFile load_fixture(const std::filesystem::path& path,
                         const std::optional<Variables>& target = std::nullopt);

enum class VerdictKind { Exact, Scaled, SampledOnly, Mismatch };

const char* to_string(VerdictKind k);

struct ComparisonVerdict {
  VerdictKind kind = VerdictKind::Mismatch;
  // computed = constant * fixture (1 for EXACT and SAMPLED_ONLY).
  std::optional<Rational> constant;
  // MISMATCH only: a point where the two sides differ, with both values.
  std::optional<std::vector<Rational>> witness;
  std::optional<Rational> computed_value;
  std::optional<Rational> fixture_value;
};

inline constexpr int kComparisonSamples = 100;

/// Deterministic positive sample points for identity fallbacks.
std::vector<std::vector<Rational>> comparison_points(std::size_t nvars, int count);

ComparisonVerdict compare_against_fixture(const RatFunc& computed, const RatFunc& fixture);

}  // namespace kcert
