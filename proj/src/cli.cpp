#include "kcert/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kcert/parser.hpp"
#include "kcert/report.hpp"

namespace kcert {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_point(const std::string& csv) {
  std::vector<Rational> point;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) point.push_back(parse_rational(item));
  return point;
}

struct Flags {
  std::string config_path;
  std::optional<int> jobs, samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> width, fixtures_dir, format;
  bool no_timing = false;
};

RunConfig resolve_config(const Flags& f) {
  RunConfig c;
  c.fixtures_dir = KCERT_DEFAULT_FIXTURES_DIR;
  std::string path = f.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar)) path = env;
  }
  if (!path.empty()) c = load_config(path, c);
  if (f.jobs) c.jobs = *f.jobs;
  if (f.samples) c.sample_count = *f.samples;
  if (f.seed) c.seed = *f.seed;
  if (f.width) c.isolation_width = parse_rational(*f.width);
  if (f.fixtures_dir) c.fixtures_dir = *f.fixtures_dir;
  if (f.format) c.format = *f.format == "json" ? OutputFormat::Json : OutputFormat::Markdown;
  if (f.no_timing) c.no_timing = true;
  c.validate();
  return c;
}

int emit(const Report& r, std::ostream& out, const std::string& output_path) {
  const std::string text = emit_report(r, r.config.format);
  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(output_path);
    if (!file || !(file << text)) throw std::runtime_error("cannot write " + output_path);
  }
  return r.aggregate == Status::Fail ? 1 : 0;
}

std::string eval_value(ChartId chart, const std::vector<Rational>& point, const std::string& what) {
  const FunctionalBundle b = build_bundle(cone_chart(chart));
  if (point.size() != b.params.size()) {
    throw UsageError("--point needs " + std::to_string(b.params.size()) + " coordinates for this chart");
  }
  if (what == "V") return to_string(evaluate(b.V, point));
  if (what == "F1") return to_string(evaluate(b.futaki.F1, point));
  if (what == "F2") return to_string(evaluate(b.futaki.F2, point));
  if (what == "A") return b.A.at(point).to_string();
  if (what == "B") return b.B.at(point).to_string();
  if (what == "C") return b.C.at(point).to_string();
  return to_string(evaluate(b.calA, point));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of the Calabi-type functional on toric del Pezzo surfaces", "kcert"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--config", flags.config_path, "JSON config file (overrides $" + std::string(kConfigEnvVar) + ")");
  app.add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--samples", flags.samples, "sample count for sampled checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", flags.seed, "sampling seed");
  app.add_option("--isolation-width", flags.width, "target width for root isolation, p/q");
  app.add_option("--fixtures-dir", flags.fixtures_dir, "fixture directory");
  app.add_option("--format", flags.format, "report format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_flag("--no-timing", flags.no_timing, "omit timing fields from reports");

  auto* verify = app.add_subcommand("verify", "run lemma certifications");
  std::vector<std::string> lemma_list;
  bool verify_all = false;
  auto* lemma_opt = verify->add_option("--lemma", lemma_list, "lemma id (repeatable)");
  auto* all_opt = verify->add_flag("--all", verify_all, "every lemma");
  lemma_opt->excludes(all_opt);

  auto* eval = app.add_subcommand("eval", "evaluate a chart quantity exactly");
  std::string chart_name, point_text, what;
  eval->add_option("--chart", chart_name)->required()->check(CLI::IsMember({"k2", "k3"}));
  eval->add_option("--point", point_text, "comma-separated rationals")->required();
  eval->add_option("--what", what)->required()->check(CLI::IsMember({"V", "F1", "F2", "A", "B", "C", "calA"}));

  auto* isolate = app.add_subcommand("isolate", "isolate the k = 2 critical point");
  std::string isolate_chart, width_text;
  isolate->add_option("--chart", isolate_chart)->required()->check(CLI::IsMember({"k2"}));
  isolate->add_option("--width", width_text, "target width, p/q");

  auto* fixtures = app.add_subcommand("fixtures", "fixture management");
  fixtures->require_subcommand(1);
  auto* fixtures_check = fixtures->add_subcommand("check", "compare every fixture with the pipeline");

  auto* report = app.add_subcommand("report", "run the configured task list");
  std::vector<std::string> report_tasks;
  std::string output_path;
  report->add_option("--task", report_tasks, "lemma id, fixture name or all (repeatable)");
  report->add_option("--output", output_path, "write the report to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    RunConfig config = resolve_config(flags);
    if (verify->parsed()) {
      if (!verify_all && lemma_list.empty()) throw UsageError("verify needs --lemma <id> or --all");
      for (const auto& id : lemma_list) {
        if (!is_lemma_id(id)) throw UsageError("unknown lemma id '" + id + "'");
      }
      config.tasks = verify_all ? lemma_ids() : lemma_list;
      return emit(run_tasks(config), out, {});
    }
    if (eval->parsed()) {
      const ChartId chart = chart_name == "k2" ? ChartId::K2 : ChartId::K3_U;
      out << eval_value(chart, parse_point(point_text), what) << "\n";
      return 0;
    }
    if (isolate->parsed()) {
      const Rational width = width_text.empty() ? config.isolation_width : parse_rational(width_text);
      if (width <= 0) throw UsageError("--width must be positive");
      Workspace ws(config.options());
      const CriticalInterval ci = k2_critical_interval(ws, width);
      out << "beta: [" << to_string(ci.beta.lo) << ", " << to_string(ci.beta.hi) << "]\n";
      out << "calA: [" << to_string(ci.calA_lo) << ", " << to_string(ci.calA_hi) << "]\n";
      return 0;
    }
    if (fixtures_check->parsed()) {
      config.tasks = fixture_names();
      return emit(run_tasks(config), out, {});
    }
    if (!report_tasks.empty()) config.tasks = report_tasks;
    config.validate();
    return emit(run_tasks(config), out, output_path);
  } catch (const std::exception& e) {
    err << "kcert: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace kcert
