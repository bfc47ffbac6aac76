#include <random>
#include <set>

#include "kcert/lemmas.hpp"
#include "kcert/parser.hpp"
#include "support.hpp"

using namespace kcert;
using kcert::test::q;

namespace {

Workspace& shared_workspace() {
  static Workspace ws([] {
    RunOptions o;
    o.fixtures_dir = KCERT_DEFAULT_FIXTURES_DIR;
    return o;
  }());
  return ws;
}

const std::vector<LemmaReport>& all_reports() {
  static const std::vector<LemmaReport> reports = [] {
    std::vector<LemmaReport> r;
    for (const auto& id : lemma_ids()) r.push_back(run_lemma(id, shared_workspace()));
    return r;
  }();
  return reports;
}

const LemmaReport& report_for(const std::string& id) {
  for (const auto& r : all_reports()) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument(id);
}

UniPoly from_roots(const std::vector<Rational>& roots, const std::vector<Rational>& quad_offsets) {
  UniPoly p({q(1)});
  for (const auto& r : roots) p = p * UniPoly({-r, q(1)});
  for (const auto& c : quad_offsets) p = p * UniPoly({c, q(0), q(1)});  // x^2 + c, c > 0
  return p;
}

// Sign changes of p on a fine grid over [lo, hi]; exact when roots are simple
// and further apart than the grid step.
int grid_sign_changes(const UniPoly& p, const Rational& lo, const Rational& hi, int steps) {
  int changes = 0;
  int prev = 0;
  for (int i = 0; i <= steps; ++i) {
    const Rational x = lo + (hi - lo) * i / steps;
    const int s = sgn(p(x));
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

}  // namespace

TEST_CASE("Sturm counts agree with a bisection oracle on 20 random polynomials") {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<int> nroots(0, 6);
  std::uniform_int_distribution<int> nquads(0, 2);
  std::uniform_int_distribution<long> slot(-40, 40);
  std::uniform_int_distribution<long> offset(1, 9);
  for (int iter = 0; iter < 20; ++iter) {
    // distinct roots on a grid of spacing 1/4
    std::set<long> slots;
    const int n = nroots(rng);
    while (static_cast<int>(slots.size()) < n) slots.insert(slot(rng));
    std::vector<Rational> roots;
    for (long s : slots) roots.push_back(q(s, 4));
    std::vector<Rational> quads;
    for (int k = nquads(rng); k > 0 && roots.size() + 2 * quads.size() + 2 <= 10; --k) quads.push_back(q(offset(rng)));
    const UniPoly p = from_roots(roots, quads);
    REQUIRE(p.degree() <= 10);
    const auto chain = sturm_chain(p);
    // grid points have odd numerators over 80, roots even ones
    const Rational lo = q(-801, 80);
    const Rational hi = q(801, 80);
    const int oracle = grid_sign_changes(p, lo, hi, 801);
    CHECK(oracle == static_cast<int>(roots.size()));
    CHECK(count_roots(chain, lo, hi) == oracle);
    CHECK(sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, 1) == oracle);
    const auto iv = sturm_isolate(p, lo, hi, q(1, 64));
    REQUIRE(iv.size() == roots.size());
    for (std::size_t i = 0; i < iv.size(); ++i) {
      CHECK(iv[i].lo < roots[i]);
      CHECK(roots[i] < iv[i].hi);
      CHECK(iv[i].hi - iv[i].lo <= q(1, 64));
    }
  }
}

TEST_CASE("Sturm rejects roots at the lower endpoint") {
  const UniPoly p({q(-1), q(0), q(1)});
  const auto chain = sturm_chain(p);
  CHECK(count_roots(chain, q(-2), q(1)) == 2);  // (lo, hi] includes 1
  CHECK_THROWS(count_roots(chain, q(1), q(3)));
  CHECK_THROWS(sturm_chain(UniPoly()));
  // isolation nudges a root sitting on an endpoint
  const auto iv = sturm_isolate(p, q(-1), q(1), q(1, 8));
  CHECK(iv.size() == 2);
}

TEST_CASE("hand inequality chains") {
  const DiagonalRestriction& d = shared_workspace().diagonal();
  const LemmaReport prime = verify_inequality_chain(ChainKind::Prime2Bound, d.P);
  CHECK(prime.status == Status::Pass);
  CHECK(prime.witnesses.at("chain").dump().find("1968") != std::string::npos);
  CHECK(prime.witnesses.at("chain").dump().find("1680") != std::string::npos);
  for (ChainKind k : {ChainKind::DoublePrime2Low, ChainKind::DoublePrime2High}) {
    const LemmaReport r = verify_inequality_chain(k, d.Q);
    CHECK(r.status == Status::Pass);
    CHECK(r.witnesses.at("chain").dump().find("3002509") != std::string::npos);
    CHECK(r.witnesses.at("chain").dump().find("131832") != std::string::npos);
  }
  // the bound chain does not hold for an unrelated polynomial
  CHECK(verify_inequality_chain(ChainKind::Prime2Bound, d.Q).status == Status::Fail);
}

TEST_CASE("positivity certificates") {
  const Variables v{"x", "y"};
  const RatFunc convex(parse_expression("x^3 + y^3 + 1", v));
  const std::vector<int> dir{1, -1};
  const PositivityCertificate ok = certify_positivity(convex, dir, "cubic");
  CHECK(ok.verdict == Status::Pass);
  const RatFunc saddle(parse_expression("x y", v));
  const PositivityCertificate bad = certify_positivity(saddle, dir, "saddle");
  CHECK(bad.verdict == Status::Fail);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first < 0);
}

TEST_CASE("every lemma passes or is a note") {
  for (const auto& r : all_reports()) {
    CAPTURE(r.id);
    CAPTURE(r.witnesses.dump().substr(0, 2000));
    if (r.id == "claritas") {
      CHECK(r.status == Status::Note);
    } else {
      CHECK(r.status == Status::Pass);
    }
  }
}

TEST_CASE("reports re-validate from their witnesses alone") {
  for (const auto& r : all_reports()) {
    CAPTURE(r.id);
    const auto problem = revalidate(r);
    CHECK_FALSE(problem.has_value());
  }
}

TEST_CASE("tampered witnesses are caught") {
  LemmaReport r = report_for("laudate");
  r.witnesses["sturm"]["queries"][0]["roots"] = 2;
  CHECK(revalidate(r).has_value());

  LemmaReport chain = report_for("prime2");
  for (auto& e : chain.witnesses["checks"]) {
    if (e.value("kind", "") == "relation") {
      e["lhs"] = "-1000000";
      break;
    }
  }
  CHECK(revalidate(chain).has_value());

  LemmaReport flipped = report_for("futaki_k2");
  flipped.status = Status::Fail;
  CHECK(revalidate(flipped).has_value());

  LemmaReport conv = report_for("convex2");
  std::string numerator = conv.witnesses["positivity"]["numerator"].get<std::string>();
  conv.witnesses["positivity"]["numerator"] = "-" + numerator;
  CHECK(revalidate(conv).has_value());
}

TEST_CASE("convexity certificates agree with sampled evaluation") {
  Sampler s(0xC0FFEE);
  for (ChartId chart : {ChartId::K2, ChartId::K3_U}) {
    REQUIRE(report_for(chart == ChartId::K2 ? "convex2" : "convex3").status == Status::Pass);
    const RatFunc& d2 = shared_workspace().second_derivative(chart);
    for (int i = 0; i < 20; ++i) {
      const auto x = chart == ChartId::K2 ? s.k2_point() : s.k3_point();
      CHECK(evaluate(d2, x) > 0);
    }
  }
}

TEST_CASE("critical interval refines to nested intervals around one root") {
  Workspace& ws = shared_workspace();
  const DiagonalRestriction& d = ws.diagonal();
  CriticalInterval prev = k2_critical_interval(ws, q(1, 16));
  for (int bits = 8; bits <= 40; bits += 8) {
    Rational width = 1;
    for (int b = 0; b < bits; ++b) width /= 2;
    const CriticalInterval next = k2_critical_interval(ws, width);
    CHECK(prev.beta.lo <= next.beta.lo);
    CHECK(next.beta.hi <= prev.beta.hi);
    CHECK(next.beta.hi - next.beta.lo <= width);
    CHECK(sgn(d.P(next.beta.lo)) != sgn(d.P(next.beta.hi)));
    CHECK(prev.calA_lo <= next.calA_lo);
    CHECK(next.calA_lo <= next.calA_hi);
    prev = next;
  }
  CHECK(prev.calA_lo > 7);
  CHECK(prev.calA_hi < q(2919, 409));
}

TEST_CASE("critical interval witness") {
  const LemmaReport& r = report_for("laudate");
  const Json& ci = r.witnesses.at("critical_interval");
  REQUIRE(ci.size() == 2);
  const Rational lo = parse_rational(ci[0].get<std::string>());
  const Rational hi = parse_rational(ci[1].get<std::string>());
  CHECK(lo > 1);
  CHECK(hi < q(6, 5));
  CHECK(hi - lo <= q(1, 1073741824));
}

TEST_CASE("fixture table") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const FixtureCheck fc = check_fixture(name, shared_workspace());
    const std::string verdict = to_string(fc.verdict.kind);
    CAPTURE(verdict);
    CHECK(fc.pass);
    if (fc.expected_constant) {
      CHECK(fc.verdict.kind == VerdictKind::Scaled);
    } else {
      CHECK(fc.verdict.kind == VerdictKind::Exact);
    }
  }
  CHECK_THROWS_AS(check_fixture("nope", shared_workspace()), std::invalid_argument);
  CHECK_THROWS_AS(run_lemma("nope", shared_workspace()), std::invalid_argument);
}
