#include "kcert/certify.hpp"

#include "kcert/parser.hpp"

namespace kcert {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Note: return "NOTE";
  }
  return "FAIL";
}

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(std::span<const Rational> point) {
  Json a = Json::array();
  for (const auto& x : point) a.push_back(x.get_str());
  return a;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Eq: return "==";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "==";
}

namespace {

Relation relation_from(const std::string& s) {
  for (Relation r : {Relation::Eq, Relation::Lt, Relation::Le, Relation::Gt, Relation::Ge}) {
    if (s == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown relation '" + s + "'");
}

Rational rat(const Json& j) { return parse_rational(j.get<std::string>()); }

}  // namespace

bool holds(const Rational& lhs, Relation r, const Rational& rhs) {
  switch (r) {
    case Relation::Eq: return lhs == rhs;
    case Relation::Lt: return lhs < rhs;
    case Relation::Le: return lhs <= rhs;
    case Relation::Gt: return lhs > rhs;
    case Relation::Ge: return lhs >= rhs;
  }
  return false;
}

bool CheckList::relation(const std::string& name, const Rational& lhs, Relation r, const Rational& rhs) {
  const bool ok = holds(lhs, r, rhs);
  entries_.push_back(Json{{"name", name}, {"kind", "relation"}, {"lhs", to_json(lhs)},
                          {"rel", to_string(r)}, {"rhs", to_json(rhs)}, {"ok", ok}});
  return ok;
}

bool CheckList::identity(const std::string& name, bool ok, Json table) {
  entries_.push_back(Json{{"name", name}, {"kind", "identity"}, {"ok", ok}, {"table", std::move(table)}});
  return ok;
}

bool CheckList::flag(const std::string& name, bool ok, Json detail) {
  Json e{{"name", name}, {"kind", "flag"}, {"ok", ok}};
  if (!detail.is_null()) e["detail"] = std::move(detail);
  entries_.push_back(std::move(e));
  return ok;
}

bool CheckList::ingredient(const LemmaReport& r) {
  const bool ok = r.status != Status::Fail;
  entries_.push_back(Json{{"name", "ingredient " + r.id}, {"kind", "ingredient"}, {"id", r.id},
                          {"status", to_string(r.status)}, {"ok", ok}});
  return ok;
}

bool CheckList::absorb(const LemmaReport& r, const std::string& prefix) {
  bool ok = true;
  for (Json e : r.witnesses.value("checks", Json::array())) {
    e["name"] = prefix + ": " + e["name"].get<std::string>();
    ok = ok && e["ok"].get<bool>();
    entries_.push_back(std::move(e));
  }
  return ok;
}

bool CheckList::all_ok() const {
  for (const auto& e : entries_) {
    if (!e["ok"].get<bool>()) return false;
  }
  return true;
}

void CheckList::finish(LemmaReport& report) const {
  report.witnesses["checks"] = entries_;
  report.status = all_ok() ? Status::Pass : Status::Fail;
  for (const auto& e : entries_) {
    if (!e["ok"].get<bool>()) {
      report.witnesses["failure"] = e;
      break;
    }
  }
}

Json evaluation_table(const RatFunc& lhs, const RatFunc& rhs, std::span<const std::vector<Rational>> points) {
  Json rows = Json::array();
  for (const auto& p : points) {
    try {
      rows.push_back(Json::array({to_json(p), to_json(evaluate(lhs, p)), to_json(evaluate(rhs, p))}));
    } catch (const DomainError&) {
      continue;
    }
  }
  return rows;
}

const char* to_string(ChainKind k) {
  switch (k) {
    case ChainKind::Prime2Bound: return "prime2_bound";
    case ChainKind::DoublePrime2Low: return "doubleprime2_bound_low";
    case ChainKind::DoublePrime2High: return "doubleprime2_bound_high";
  }
  return "?";
}

namespace {

struct SplitSums {
  bool split_ok = true;
  Rational low_total{0};   // sum over degrees <= split
  Rational high_total{0};  // sum over degrees > split
};

// low_sign / high_sign: required sign (+1 / -1) of coefficients below / above the split.
SplitSums split_sums(const std::vector<Rational>& c, int split, int low_sign, int high_sign) {
  SplitSums s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool low = static_cast<int>(i) <= split;
    const int want = low ? low_sign : high_sign;
    if (sgn(c[i]) == -want) s.split_ok = false;
    (low ? s.low_total : s.high_total) += c[i];
  }
  return s;
}

struct ChainSpec {
  int split;
  int low_sign;
  int high_sign;
};

ChainSpec spec_of(ChainKind k) {
  if (k == ChainKind::Prime2Bound) return {6, -1, +1};
  return {10, +1, -1};
}

}  // namespace

LemmaReport verify_inequality_chain(ChainKind kind, const UniPoly& poly) {
  LemmaReport r;
  r.id = to_string(kind);
  CheckList checks;
  const ChainSpec cs = spec_of(kind);
  const SplitSums s = split_sums(poly.coeffs(), cs.split, cs.low_sign, cs.high_sign);
  Json block{{"kind", to_string(kind)}, {"split_degree", cs.split}};
  Json coeffs = Json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(to_json(c));
  block["coefficients"] = coeffs;
  checks.flag("coefficient signs split at degree " + std::to_string(cs.split), s.split_ok);

  const Rational six_fifths(6, 5);
  if (kind == ChainKind::Prime2Bound) {
    // beta > 1: negative terms >= c_i beta^6, positive terms >= c_i beta^7.
    const Rational neg = -s.low_total;
    const Rational pos = s.high_total;
    block["negative_total"] = to_json(neg);
    block["positive_total"] = to_json(pos);
    checks.relation("negative coefficient total", neg, Relation::Eq, Rational(1968));
    checks.relation("positive coefficient total", pos, Relation::Eq, Rational(1680));
    checks.relation("6/5 exceeds the root of beta^6 (pos beta - neg)", six_fifths, Relation::Gt, neg / pos);
  } else {
    const Rational pos = s.low_total;
    const Rational neg = -s.high_total;
    block["positive_total"] = to_json(pos);
    block["negative_total"] = to_json(neg);
    checks.relation("positive coefficient total", pos, Relation::Eq, Rational(3002509));
    checks.relation("negative coefficient total", neg, Relation::Eq, Rational(131832));
    if (kind == ChainKind::DoublePrime2Low) {
      // beta in (0,1]: Q >= (pos - neg beta) beta^10 >= (pos - neg) beta^10.
      checks.relation("pos - neg beta > 0 at beta = 1", pos - neg, Relation::Gt, Rational(0));
    } else {
      // beta in (1, 6/5]: Q > pos - neg beta^deg.
      const int deg = poly.degree();
      block["degree"] = deg;
      Rational p15 = 1;
      for (int i = 0; i < deg; ++i) p15 *= six_fifths;
      checks.relation("(6/5)^deg < 16", p15, Relation::Lt, Rational(16));
      checks.relation("16 < pos / neg", Rational(16), Relation::Lt, pos / neg);
      checks.relation("pos - neg (6/5)^deg > 0", pos - neg * p15, Relation::Gt, Rational(0));
    }
  }
  r.witnesses["chain"] = block;
  checks.finish(r);
  return r;
}

Json PositivityCertificate::to_json() const {
  Json j{{"target", target},
         {"direction", direction},
         {"variables", numerator.variables()},
         {"numerator_terms", numerator.size()},
         {"numerator_min_coeff", kcert::to_json(numerator_min_coeff)},
         {"numerator_nonzero", numerator_nonzero},
         {"denominator_form", "D^3"},
         {"denominator_base_terms", denominator_base.size()},
         {"denominator_all_positive", denominator_all_positive},
         {"verdict", to_string(verdict)}};
  if (witness) {
    Json m = Json::array();
    for (std::size_t i = 0; i < witness->second.size(); ++i) m.push_back(witness->second[i]);
    j["witness"] = Json{{"coefficient", kcert::to_json(witness->first)}, {"exponents", m}};
  }
  j["numerator"] = numerator.to_string();
  j["denominator_base"] = denominator_base.to_string();
  return j;
}

PositivityCertificate certify_positivity_of(const RatFunc& d2, const MultiPoly& base, std::span<const int> direction,
                                            std::string target) {
  PositivityCertificate c;
  c.target = std::move(target);
  c.direction.assign(direction.begin(), direction.end());
  c.numerator = d2.num();
  c.denominator_base = base;
  const NonnegCheck n = coefficients_all_nonneg(c.numerator);
  c.numerator_min_coeff = n.min_coefficient;
  c.witness = n.witness;
  c.numerator_nonzero = !c.numerator.is_zero();
  c.denominator_all_positive = !base.is_zero() && coefficients_all_nonneg(base).all_nonneg;
  const bool structural = d2.den() == base * base * base;
  c.verdict = n.all_nonneg && c.numerator_nonzero && c.denominator_all_positive && structural ? Status::Pass
                                                                                              : Status::Fail;
  return c;
}

PositivityCertificate certify_positivity(const RatFunc& f, std::span<const int> direction, std::string target) {
  return certify_positivity_of(directional_second_derivative(f, direction), f.den(), direction, std::move(target));
}

Json sturm_witness(const UniPoly& p, const std::vector<SturmQuery>& queries,
                   const std::vector<RootInterval>& intervals, const std::optional<Rational>& width) {
  Json j;
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  j["coefficients"] = coeffs;
  Json qs = Json::array();
  for (const auto& q : queries) {
    qs.push_back(Json{{"lo", to_json(q.lo)}, {"hi", q.hi ? to_json(*q.hi) : Json("inf")}, {"roots", q.roots}});
  }
  j["queries"] = qs;
  Json iv = Json::array();
  for (const auto& i : intervals) iv.push_back(Json::array({to_json(i.lo), to_json(i.hi)}));
  j["intervals"] = iv;
  if (width) j["width"] = to_json(*width);
  return j;
}

namespace {

std::optional<std::string> revalidate_checks(const Json& checks, Status status) {
  bool all_ok = true;
  for (const auto& e : checks) {
    const std::string name = e.value("name", "?");
    const bool ok = e.at("ok").get<bool>();
    all_ok = all_ok && ok;
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "relation") {
      if (holds(rat(e.at("lhs")), relation_from(e.at("rel").get<std::string>()), rat(e.at("rhs"))) != ok)
        return "relation '" + name + "' does not re-check";
    } else if (kind == "identity") {
      for (const auto& row : e.at("table")) {
        if (ok && rat(row.at(1)) != rat(row.at(2))) return "identity '" + name + "' table row differs";
      }
    }
  }
  if (status == Status::Pass && !all_ok) return std::string("PASS report contains a failing check");
  if (status == Status::Fail && all_ok) return std::string("FAIL report without a failing check");
  return std::nullopt;
}

std::optional<std::string> revalidate_positivity(const Json& j) {
  Variables vars = j.at("variables").get<Variables>();
  const MultiPoly num = parse_expression(j.at("numerator").get<std::string>(), vars);
  const MultiPoly base = parse_expression(j.at("denominator_base").get<std::string>(), vars);
  const NonnegCheck n = coefficients_all_nonneg(num);
  const bool pass = n.all_nonneg && !num.is_zero() && !base.is_zero() && coefficients_all_nonneg(base).all_nonneg;
  if (num.size() != j.at("numerator_terms").get<std::size_t>()) return std::string("numerator term count differs");
  if (n.min_coefficient != rat(j.at("numerator_min_coeff"))) return std::string("numerator minimum differs");
  if (pass != (j.at("verdict").get<std::string>() == "PASS")) return std::string("positivity verdict differs");
  return std::nullopt;
}

std::optional<std::string> revalidate_sturm(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coefficients")) c.push_back(rat(x));
  const UniPoly p(c);
  const auto chain = sturm_chain(p);
  for (const auto& q : j.at("queries")) {
    const Rational lo = rat(q.at("lo"));
    const int got = q.at("hi") == "inf" ? count_roots_above(chain, lo) : count_roots(chain, lo, rat(q.at("hi")));
    if (got != q.at("roots").get<int>()) return std::string("Sturm query count differs");
  }
  for (const auto& iv : j.at("intervals")) {
    const Rational lo = rat(iv.at(0));
    const Rational hi = rat(iv.at(1));
    if (p(hi) == 0 || count_roots(chain, lo, hi) != 1) return std::string("isolating interval does not hold one root");
    if (j.contains("width") && hi - lo > rat(j.at("width"))) return std::string("isolating interval too wide");
  }
  return std::nullopt;
}

std::optional<std::string> revalidate_chain(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coefficients")) c.push_back(rat(x));
  const int split = j.at("split_degree").get<int>();
  Rational low = 0;
  Rational high = 0;
  for (std::size_t i = 0; i < c.size(); ++i) (static_cast<int>(i) <= split ? low : high) += c[i];
  const Rational neg = rat(j.at("negative_total"));
  const Rational pos = rat(j.at("positive_total"));
  const bool ok = split == 6 ? (neg == -low && pos == high) : (pos == low && neg == -high);
  if (!ok) return std::string("coefficient totals do not re-add");
  return std::nullopt;
}

}  // namespace

std::optional<std::string> revalidate(const LemmaReport& report) {
  try {
    const Json& w = report.witnesses;
    if (w.contains("checks")) {
      if (auto e = revalidate_checks(w.at("checks"), report.status)) return report.id + ": " + *e;
    }
    for (auto it = w.begin(); it != w.end(); ++it) {
      std::optional<std::string> e;
      if (it.key().rfind("positivity", 0) == 0) e = revalidate_positivity(it.value());
      if (it.key().rfind("sturm", 0) == 0) e = revalidate_sturm(it.value());
      if (it.key().rfind("chain", 0) == 0) e = revalidate_chain(it.value());
      if (e) return report.id + ": " + it.key() + ": " + *e;
    }
  } catch (const std::exception& ex) {
    return report.id + ": malformed witness: " + ex.what();
  }
  return std::nullopt;
}

}  // namespace kcert
