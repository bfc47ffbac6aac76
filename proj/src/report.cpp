#include "kcert/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

namespace kcert {
namespace {

bool is_fixture_name(const std::string& name) {
  const auto& n = fixture_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

const char* format_name(OutputFormat f) { return f == OutputFormat::Json ? "json" : "markdown"; }

}  // namespace

void RunConfig::validate() const {
  if (sample_count < 1) throw ConfigError("sample_count must be at least 1");
  if (isolation_width <= 0) throw ConfigError("isolation_width must be positive");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  for (const auto& t : tasks) {
    if (t != "all" && !is_lemma_id(t) && !is_fixture_name(t)) throw ConfigError("unknown task '" + t + "'");
  }
}

RunOptions RunConfig::options() const {
  RunOptions o;
  o.sample_count = sample_count;
  o.isolation_width = isolation_width;
  o.seed = seed;
  o.fixtures_dir = fixtures_dir;
  return o;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError(path.string() + ": expected a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "tasks") {
        base.tasks = value.is_string() ? std::vector<std::string>{value.get<std::string>()}
                                       : value.get<std::vector<std::string>>();
      } else if (key == "sample_count") {
        base.sample_count = value.get<int>();
      } else if (key == "isolation_width") {
        base.isolation_width = parse_rational(value.get<std::string>());
      } else if (key == "jobs") {
        base.jobs = value.get<int>();
      } else if (key == "format") {
        const auto f = value.get<std::string>();
        if (f != "json" && f != "markdown") throw ConfigError("format must be json or markdown");
        base.format = f == "json" ? OutputFormat::Json : OutputFormat::Markdown;
      } else if (key == "fixtures_dir") {
        base.fixtures_dir = value.get<std::string>();
      } else if (key == "seed") {
        base.seed = value.get<std::uint64_t>();
      } else if (key == "no_timing") {
        base.no_timing = value.get<bool>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::type_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return base;
}

Status aggregate_of(const std::vector<LemmaReport>& lemmas, const std::vector<FixtureCheck>& fixtures) {
  for (const auto& l : lemmas) {
    if (l.status == Status::Fail) return Status::Fail;
  }
  for (const auto& f : fixtures) {
    if (!f.pass) return Status::Fail;
  }
  return Status::Pass;
}

Report run_tasks(const RunConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const bool all = std::find(config.tasks.begin(), config.tasks.end(), "all") != config.tasks.end();
  auto wanted = [&](const std::string& id) {
    return all || std::find(config.tasks.begin(), config.tasks.end(), id) != config.tasks.end();
  };
  std::vector<std::string> lemma_list, fixture_list;
  for (const auto& id : lemma_ids()) {
    if (wanted(id)) lemma_list.push_back(id);
  }
  for (const auto& name : fixture_names()) {
    if (wanted(name)) fixture_list.push_back(name);
  }

  Report report;
  report.config = config;
  report.lemmas.resize(lemma_list.size());
  report.fixtures.resize(fixture_list.size());
  Workspace ws(config.options());

  // Heaviest items first so the pool stays busy; results land in fixed slots.
  const std::size_t total = lemma_list.size() + fixture_list.size();
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = total - 1 - i;
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(total);
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const std::size_t i = order[k];
      try {
        if (i < lemma_list.size()) {
          report.lemmas[i] = run_lemma(lemma_list[i], ws);
        } else {
          const std::size_t f = i - lemma_list.size();
          report.fixtures[f] = check_fixture(fixture_list[f], ws);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int nworkers = static_cast<int>(std::min<std::size_t>(config.jobs, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (int w = 1; w < nworkers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  report.aggregate = aggregate_of(report.lemmas, report.fixtures);
  report.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Json report_json(const Report& report) {
  const RunConfig& c = report.config;
  Json j;
  j["version"] = kToolVersion;
  j["config"] = {{"tasks", c.tasks},
                 {"sample_count", c.sample_count},
                 {"isolation_width", to_json(c.isolation_width)},
                 {"jobs", c.jobs},
                 {"format", format_name(c.format)},
                 {"fixtures_dir", c.fixtures_dir.string()},
                 {"seed", c.seed},
                 {"no_timing", c.no_timing}};
  Json lemmas = Json::array();
  for (const auto& l : report.lemmas) {
    Json e{{"id", l.id}, {"status", to_string(l.status)}, {"witnesses", l.witnesses}};
    e["seconds"] = c.no_timing ? Json(nullptr) : Json(l.seconds);
    lemmas.push_back(std::move(e));
  }
  j["lemmas"] = std::move(lemmas);
  Json fixtures = Json::array();
  for (const auto& f : report.fixtures) fixtures.push_back(to_json(f));
  j["fixtures"] = std::move(fixtures);
  j["aggregate"] = to_string(report.aggregate);
  j["total_seconds"] = c.no_timing ? Json(nullptr) : Json(report.total_seconds);
  return j;
}

std::string truncate_terms(const std::string& text, std::size_t max_terms) {
  if (text.size() > 4 && text.front() == '(' && text.back() == ')') {
    const auto mid = text.find(")/(");
    if (mid != std::string::npos) {
      return "(" + truncate_terms(text.substr(1, mid - 1), max_terms) + ")/(" +
             truncate_terms(text.substr(mid + 3, text.size() - mid - 4), max_terms) + ")";
    }
  }
  std::size_t terms = 1;
  std::size_t cut = std::string::npos;
  for (std::size_t i = 0; i + 2 < text.size(); ++i) {
    if (text[i] == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') && text[i + 2] == ' ') {
      if (terms == max_terms) cut = i;
      ++terms;
    }
  }
  if (cut == std::string::npos) return text;
  return text.substr(0, cut) + " …(" + std::to_string(terms - max_terms) + " more terms)";
}

namespace {

void render_markdown(std::ostream& out, const Json& value, int depth) {
  const std::string indent(2 * std::max(depth, 0), ' ');
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) {
      if (v.is_primitive()) {
        out << indent << "- " << k << ": ";
        render_markdown(out, v, -1);
      } else {
        out << indent << "- " << k << ":\n";
        render_markdown(out, v, depth + 1);
      }
    }
  } else if (value.is_array()) {
    const bool flat = std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); });
    if (flat) {
      out << indent << "- " << value.dump() << "\n";
    } else {
      for (const auto& v : value) {
        if (v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
                                   return x.is_primitive();
                                 }))) {
          render_markdown(out, v, depth);
        } else {
          out << indent << "-\n";
          render_markdown(out, v, depth + 1);
        }
      }
    }
  } else {
    if (depth >= 0) out << indent << "- ";
    if (value.is_string()) {
      out << "`" << truncate_terms(value.get<std::string>()) << "`\n";
    } else {
      out << value.dump() << "\n";
    }
  }
}

}  // namespace

std::string emit_report(const Report& report, OutputFormat format) {
  const Json j = report_json(report);
  if (format == OutputFormat::Json) return j.dump(2) + "\n";
  std::ostringstream out;
  out << "# kcert report " << kToolVersion << "\n\n";
  out << "Aggregate: **" << j["aggregate"].get<std::string>() << "**\n\n";
  out << "## Config\n\n";
  render_markdown(out, j["config"], 0);
  if (!report.lemmas.empty()) {
    out << "\n## Lemmas\n";
    for (const auto& l : j["lemmas"]) {
      out << "\n### " << l["id"].get<std::string>() << ": " << l["status"].get<std::string>();
      if (!l["seconds"].is_null()) out << " (" << l["seconds"].dump() << " s)";
      out << "\n\n";
      render_markdown(out, l["witnesses"], 0);
    }
  }
  if (!report.fixtures.empty()) {
    out << "\n## Fixtures\n\n| name | verdict | constant | pass |\n|---|---|---|---|\n";
    for (const auto& f : j["fixtures"]) {
      out << "| " << f["name"].get<std::string>() << " | " << f["verdict"].get<std::string>() << " | "
          << (f.contains("constant") ? f["constant"].get<std::string>() : "") << " | "
          << (f["pass"].get<bool>() ? "yes" : "no") << " |\n";
    }
  }
  if (!j["total_seconds"].is_null()) out << "\nTotal: " << j["total_seconds"].dump() << " s\n";
  return out.str();
}

}  // namespace kcert
