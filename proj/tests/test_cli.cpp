#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kcert/cli.hpp"
#include "kcert/report.hpp"
#include "support.hpp"

using namespace kcert;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result kcert_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "kcert_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("eval prints exact values") {
  CHECK(kcert_run({"eval", "--chart", "k2", "--point", "1,1", "--what", "calA"}).out == "2919/409\n");
  CHECK(kcert_run({"eval", "--chart", "k3", "--point", "1,1,1", "--what", "F1"}).out == "0\n");
  CHECK(kcert_run({"eval", "--chart", "k3", "--point", "1,1,1", "--what", "calA"}).out == "81/13\n");
  CHECK(kcert_run({"eval", "--chart", "k2", "--point", "1,2", "--what", "F2"}).out == "-12/11\n");
  CHECK(kcert_run({"eval", "--chart", "k2", "--point", "1,1", "--what", "V"}).out == "7/2\n");
  CHECK(kcert_run({"eval", "--chart", "k2", "--point", "1,1", "--what", "A"}).out == "265/1008*pi^-2\n");
}

TEST_CASE("usage and input errors exit with 2") {
  const Result decimal = kcert_run({"eval", "--chart", "k2", "--point", "1.5,1", "--what", "calA"});
  CHECK(decimal.code == 2);
  CHECK(decimal.err.find("malformed rational") != std::string::npos);
  CHECK(kcert_run({"eval", "--chart", "k2", "--point", "1,1,1", "--what", "calA"}).code == 2);
  CHECK(kcert_run({"eval", "--chart", "k4", "--point", "1,1", "--what", "calA"}).code == 2);
  CHECK(kcert_run({"verify", "--lemma", "nope"}).code == 2);
  CHECK(kcert_run({"verify"}).code == 2);
  CHECK(kcert_run({}).code == 2);
  CHECK(kcert_run({"frobnicate"}).code == 2);
  CHECK(kcert_run({"isolate", "--chart", "k2", "--width", "0.001"}).code == 2);
  CHECK(kcert_run({"report", "--task", "nope"}).code == 2);
  CHECK(kcert_run({"--samples", "0", "verify", "--lemma", "convex2"}).code == 2);
  CHECK(kcert_run({"--fixtures-dir", "/nonexistent", "fixtures", "check"}).code == 2);
  CHECK(kcert_run({"--help"}).code == 0);
}

TEST_CASE("verify emits a JSON report whose exit code follows the aggregate") {
  const Result r = kcert_run({"verify", "--lemma", "convex2", "--format", "json", "--no-timing"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["aggregate"] == "PASS");
  REQUIRE(j["lemmas"].size() == 1);
  CHECK(j["lemmas"][0]["id"] == "convex2");
  CHECK(j["lemmas"][0]["status"] == "PASS");
  CHECK(j["lemmas"][0]["seconds"].is_null());
  CHECK(j["fixtures"].empty());
}

TEST_CASE("isolate prints the critical interval") {
  const Result r = kcert_run({"isolate", "--chart", "k2", "--width", "1/1024"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("beta: [", 0) == 0);
  CHECK(r.out.find("calA: [") != std::string::npos);
}

TEST_CASE("empty task list gives PASS with zero items") {
  RunConfig c;
  c.tasks.clear();
  c.fixtures_dir = KCERT_DEFAULT_FIXTURES_DIR;
  const Report r = run_tasks(c);
  CHECK(r.aggregate == Status::Pass);
  CHECK(r.lemmas.empty());
  CHECK(r.fixtures.empty());
  const Json j = Json::parse(emit_report(r, OutputFormat::Json));
  CHECK(j["aggregate"] == "PASS");
}

TEST_CASE("aggregate ignores notes and fails on any failure") {
  LemmaReport pass{"a", Status::Pass, Json::object(), 0};
  LemmaReport note{"b", Status::Note, Json::object(), 0};
  LemmaReport fail{"c", Status::Fail, Json::object(), 0};
  CHECK(aggregate_of({pass, note}, {}) == Status::Pass);
  CHECK(aggregate_of({pass, note, fail}, {}) == Status::Fail);
  FixtureCheck bad;
  bad.pass = false;
  CHECK(aggregate_of({pass}, {bad}) == Status::Fail);
}

TEST_CASE("reports are byte-identical without timing, whatever the job count") {
  const std::string config = write_file("det.json", R"({"tasks": ["futaki_k2", "laudate", "calA_k2", "P"]})");
  const Result a = kcert_run({"--config", config, "--no-timing", "--jobs", "1", "report"});
  const Result b = kcert_run({"--config", config, "--no-timing", "--jobs", "1", "report"});
  const Result c = kcert_run({"--config", config, "--no-timing", "--jobs", "4", "report"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Json ja = Json::parse(a.out), jc = Json::parse(c.out);
  ja["config"].erase("jobs");
  jc["config"].erase("jobs");
  CHECK(ja.dump() == jc.dump());
  CHECK(ja["lemmas"][0]["id"] == "futaki_k2");
  CHECK(ja["lemmas"][1]["id"] == "laudate");
  CHECK(ja["lemmas"][1]["witnesses"]["critical_interval"].size() == 2);
  CHECK(ja["fixtures"][0]["name"] == "calA_k2");
  CHECK(ja["fixtures"][0]["verdict"] == "EXACT");
}

TEST_CASE("config comes from --config, else from the environment") {
  const std::string one = write_file("one.json", R"({"tasks": ["calA_k2"], "sample_count": 7})");
  const std::string two = write_file("two.json", R"({"tasks": ["F_beta"], "isolation_width": "1/8"})");
  ::setenv(kConfigEnvVar, two.c_str(), 1);
  const Json from_env = Json::parse(kcert_run({"--no-timing", "report"}).out);
  CHECK(from_env["config"]["tasks"][0] == "F_beta");
  CHECK(from_env["config"]["isolation_width"] == "1/8");
  const Json from_flag = Json::parse(kcert_run({"--config", one, "--no-timing", "report"}).out);
  CHECK(from_flag["config"]["tasks"][0] == "calA_k2");
  CHECK(from_flag["config"]["sample_count"] == 7);
  ::unsetenv(kConfigEnvVar);

  CHECK(kcert_run({"--config", write_file("bad.json", R"({"isolation_width": "0.5"})"), "report"}).code == 2);
  CHECK(kcert_run({"--config", write_file("bad2.json", R"({"colour": 1})"), "report"}).code == 2);
  CHECK(kcert_run({"--config", write_file("bad3.json", "{"), "report"}).code == 2);
  CHECK(kcert_run({"--config", (scratch_dir() / "missing.json").string(), "report"}).code == 2);
}

TEST_CASE("report can be written to a file") {
  const auto path = (scratch_dir() / "out.md").string();
  const Result r = kcert_run({"--format", "markdown", "report", "--task", "calA_k2", "--output", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("| calA_k2 | EXACT | 1 | yes |") != std::string::npos);
}

TEST_CASE("markdown truncates long polynomials") {
  std::string poly = "x";
  for (int i = 0; i < 45; ++i) poly += " + x^" + std::to_string(i + 2);
  const std::string cut = truncate_terms(poly);
  CHECK(cut.find("x^40") != std::string::npos);
  CHECK(cut.find("x^41 ") == std::string::npos);
  CHECK(cut.find("…(6 more terms)") != std::string::npos);
  CHECK(truncate_terms("x + y") == "x + y");
  CHECK(truncate_terms("(" + poly + ")/(x - 1)").find(")/(x - 1)") != std::string::npos);

  const Result r = kcert_run({"--format", "markdown", "verify", "--lemma", "convex2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("more terms)") != std::string::npos);
}

TEST_CASE("fixture check fails while any fixture mismatches") {
  const Result r = kcert_run({"--no-timing", "fixtures", "check"});
  const Json j = Json::parse(r.out);
  bool any_fail = false;
  for (const auto& f : j["fixtures"]) any_fail = any_fail || !f["pass"].get<bool>();
  CHECK(r.code == (any_fail ? 1 : 0));
  CHECK(j["aggregate"] == (any_fail ? "FAIL" : "PASS"));
  CHECK(j["fixtures"].size() == fixture_names().size());
}
