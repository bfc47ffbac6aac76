#include "kcert/fixture.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "kcert/calculus.hpp"
#include "kcert/parser.hpp"

namespace kcert {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Section {
  std::string text;
  int first_line = 0;  // file line of the first body line
};

MultiPoly parse_section(const Section& sec, const Variables& vars, const std::string& origin,
                        const char* which) {
  try {
    return parse_expression(sec.text, vars);
  } catch (const ParseError& e) {
    throw FixtureError(origin + ": [" + which + "] line " +
                       std::to_string(sec.first_line + e.line() - 1) + ", column " +
                       std::to_string(e.column()) + ": " + e.what());
  }
}

}  // namespace

FixtureFile parse_fixture(const std::string& content, const std::string& origin,
                          const std::optional<Variables>& target) {
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
      current = t.substr(1, t.size() - 2);
      if (sections.count(current) != 0) throw FixtureError(origin + ": duplicate section [" + current + "]");
      sections[current].first_line = lineno + 1;
      continue;
    }
    if (current.empty()) {
      if (!t.empty()) throw FixtureError(origin + ": text before the first section");
      continue;
    }
    sections[current].text += line;
    sections[current].text += '\n';
  }
  for (const char* required : {"meta", "numerator"}) {
    if (sections.count(required) == 0)
      throw FixtureError(origin + ": missing section [" + required + "]");
  }

  FixtureFile f;
  std::istringstream meta(sections["meta"].text);
  while (std::getline(meta, line)) {
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw FixtureError(origin + ": malformed meta line '" + t + "'");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "name") {
      f.name = value;
    } else if (key == "vars") {
      std::istringstream vs(value);
      std::string v;
      while (std::getline(vs, v, ',')) {
        v = trim(v);
        if (!v.empty()) f.variables.push_back(v);
      }
    } else if (key == "provenance") {
      f.provenance = value;
    }
  }
  if (f.name.empty()) throw FixtureError(origin + ": meta has no name");
  if (f.variables.empty()) throw FixtureError(origin + ": meta has no vars");
  const std::string label = origin + " (" + f.name + ")";

  f.numerator_text = trim(sections["numerator"].text);
  if (auto it = sections.find("denominator"); it != sections.end()) {
    std::string d = trim(it->second.text);
    if (!d.empty()) f.denominator_text = d;
  }
  MultiPoly num = parse_section(sections["numerator"], f.variables, label, "numerator");
  MultiPoly den = f.denominator_text == "1"
                      ? MultiPoly(f.variables, 1)
                      : parse_section(sections["denominator"], f.variables, label, "denominator");
  if (den.is_zero()) throw FixtureError(label + ": denominator is zero");
  if (target) {
    try {
      num = embed(num, *target);
      den = embed(den, *target);
    } catch (const std::exception& e) {
      throw FixtureError(label + ": " + e.what());
    }
  }
  f.value = RatFunc(std::move(num), std::move(den));
  return f;
}

FixtureFile load_fixture(const std::filesystem::path& path, const std::optional<Variables>& target) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot open fixture " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str(), path.string(), target);
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Exact: return "EXACT";
    case VerdictKind::Scaled: return "SCALED";
    case VerdictKind::SampledOnly: return "SAMPLED_ONLY";
    case VerdictKind::Mismatch: return "MISMATCH";
  }
  return "MISMATCH";
}

std::vector<std::vector<Rational>> comparison_points(std::size_t nvars, int count) {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<int> dist(1, 1000);
  std::vector<std::vector<Rational>> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> p;
    for (std::size_t j = 0; j < nvars; ++j) {
      Rational q(dist(rng), dist(rng));
      q.canonicalize();
      p.push_back(q);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

namespace {

// Returns c with computed = c * fixture, when such a constant exists.
std::optional<Rational> symbolic_ratio(const RatFunc& computed, const RatFunc& fixture) {
  if (computed.is_zero() || fixture.is_zero()) {
    if (computed.is_zero() && fixture.is_zero()) return Rational(1);
    return std::nullopt;
  }
  Rational dr;
  if (proportional(fixture.den(), computed.den(), &dr)) {
    // computed = N/D, fixture = M/(dr D): computed = (k dr) fixture when N = k M.
    Rational k;
    if (proportional(computed.num(), fixture.num(), &k)) return k * dr;
    return std::nullopt;
  }
  Rational c;
  if (proportional(computed.num() * fixture.den(), fixture.num() * computed.den(), &c)) return c;
  return std::nullopt;
}

}  // namespace

ComparisonVerdict compare_against_fixture(const RatFunc& computed, const RatFunc& fixture) {
  computed.num().require_same_variables(fixture.num(), "fixture comparison");
  ComparisonVerdict v;
  if (auto c = symbolic_ratio(computed, fixture); c && *c > 0) {
    v.kind = *c == 1 ? VerdictKind::Exact : VerdictKind::Scaled;
    v.constant = *c;
    return v;
  }
  for (const auto& pt : comparison_points(computed.num().nvars(), kComparisonSamples)) {
    Rational a;
    Rational b;
    try {
      a = evaluate(computed, pt);
      b = evaluate(fixture, pt);
    } catch (const DomainError&) {
      continue;
    }
    if (a != b) {
      v.kind = VerdictKind::Mismatch;
      v.witness = pt;
      v.computed_value = a;
      v.fixture_value = b;
      return v;
    }
  }
  v.kind = VerdictKind::SampledOnly;
  v.constant = Rational(1);
  return v;
}

}  // namespace kcert
