#pragma once

#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kcert/calculus.hpp"
#include "kcert/sturm.hpp"

namespace kcert {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Note };
const char* to_string(Status s);

struct LemmaReport {
  std::string id;
  Status status = Status::Fail;
  Json witnesses = Json::object();
  double seconds = 0;
};

Json to_json(const Rational& q);
Json to_json(std::span<const Rational> point);

enum class Relation { Eq, Lt, Le, Gt, Ge };
const char* to_string(Relation r);
bool holds(const Rational& lhs, Relation r, const Rational& rhs);

/// Ordered list of named checks. Relations and evaluation tables carry enough
/// data to be re-checked from the serialized form alone.
class CheckList {
 public:
  bool relation(const std::string& name, const Rational& lhs, Relation r, const Rational& rhs);
  /// Symbolic identity decided by the caller; `table` holds [point, lhs, rhs] rows.
  bool identity(const std::string& name, bool holds, Json table = Json::array());
  /// Structural fact without numeric payload.
  bool flag(const std::string& name, bool ok, Json detail = nullptr);
  /// Outcome of another lemma this one depends on.
  bool ingredient(const LemmaReport& r);
  /// Appends the checks of a sub-report, names prefixed.
  bool absorb(const LemmaReport& r, const std::string& prefix);

  bool all_ok() const;
  const Json& entries() const { return entries_; }
  /// Writes checks, status and, on failure, the first failing entry.
  void finish(LemmaReport& report) const;

 private:
  Json entries_ = Json::array();
};

/// [[point, lhs(point), rhs(point)], ...] over the given points.
Json evaluation_table(const RatFunc& lhs, const RatFunc& rhs, std::span<const std::vector<Rational>> points);

enum class ChainKind { Prime2Bound, DoublePrime2Low, DoublePrime2High };
const char* to_string(ChainKind k);

/// Replays the hand coefficient-sum bounds on P (Prime2Bound) or Q (the other two).
LemmaReport verify_inequality_chain(ChainKind kind, const UniPoly& poly);

struct PositivityCertificate {
  std::string target;
  std::vector<int> direction;
  MultiPoly numerator;         // structural numerator of the second derivative
  MultiPoly denominator_base;  // D; the denominator is D^3
  Rational numerator_min_coeff{0};
  std::optional<std::pair<Rational, Monomial>> witness;  // most negative coefficient
  bool numerator_nonzero = false;
  bool denominator_all_positive = false;
  Status verdict = Status::Fail;

  Json to_json() const;
};

PositivityCertificate certify_positivity(const RatFunc& f, std::span<const int> direction, std::string target);
/// Same check on an already assembled second derivative N / D^3.
PositivityCertificate certify_positivity_of(const RatFunc& second_derivative, const MultiPoly& base,
                                            std::span<const int> direction, std::string target);

Json sturm_witness(const UniPoly& p, const std::vector<SturmQuery>& queries,
                   const std::vector<RootInterval>& intervals, const std::optional<Rational>& width);

/// Re-checks a report from its witnesses without recomputing symbolic objects.
/// Returns an explanation on failure.
std::optional<std::string> revalidate(const LemmaReport& report);

}  // namespace kcert
