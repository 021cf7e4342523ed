// stc: evaluate counterfactual queries over finite event scenarios in
// Minkowski space-time. See README.md for the file format and semantics.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stc/bundled.hpp"
#include "stc/dsl.hpp"
#include "stc/report.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

bool color_enabled() {
  const char* env = std::getenv("STC_COLOR");
  return env && std::string(env) == "1";
}

int fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitError;
}

int load_scenario(const std::string& path, stc::ScenarioDocument& doc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  stc::ParseResult parsed = stc::parse_scenario(buf.str());
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics)
      std::cerr << path << ":" << stc::to_string(d) << "\n";
    return kExitError;
  }
  doc = std::move(*parsed.document);
  return 0;
}

// A query argument is either the name of a query stored in the scenario file
// or an inline expression like "(a = +1) => (c = +1) @anyframe".
int resolve_query(const stc::ScenarioDocument& doc, const std::string& arg,
                  stc::QueryExpression& query) {
  for (const auto& nq : doc.queries) {
    if (nq.name == arg) {
      query = nq.query;
      return 0;
    }
  }
  stc::QueryParseResult parsed = stc::parse_query(arg);
  if (!parsed.ok()) {
    std::cerr << "error: '" << arg
              << "' is not a stored query name, and parsing it as an inline "
                 "query failed:\n";
    for (const auto& d : parsed.diagnostics)
      std::cerr << "  " << stc::to_string(d) << "\n";
    return kExitError;
  }
  try {
    stc::validate_proposition(doc.scenario, parsed.query->antecedent);
    stc::validate_proposition(doc.scenario, parsed.query->consequent);
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
  query = std::move(*parsed.query);
  return 0;
}

int cmd_eval(const std::string& path, const std::string& query_arg) {
  stc::ScenarioDocument doc;
  if (int rc = load_scenario(path, doc)) return rc;
  stc::QueryExpression query;
  if (int rc = resolve_query(doc, query_arg, query)) return rc;
  try {
    stc::Verdict v = stc::evaluate_query(doc.scenario, query);
    const bool color = color_enabled();
    const char* word = v.truth ? "TRUE" : "FALSE";
    if (color)
      std::cout << (v.truth ? "\x1b[32m" : "\x1b[31m") << word << "\x1b[0m";
    else
      std::cout << word;
    if (v.vacuous) std::cout << " vacuous";
    std::cout << "\n";
    return v.truth ? kExitTrue : kExitFalse;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_explain(const std::string& path, const std::string& query_arg,
                bool structured) {
  stc::ScenarioDocument doc;
  if (int rc = load_scenario(path, doc)) return rc;
  stc::QueryExpression query;
  if (int rc = resolve_query(doc, query_arg, query)) return rc;
  try {
    stc::ExplainReport report = stc::build_explain_report(doc.scenario, query);
    std::cout << (structured ? stc::render_json(report)
                             : stc::render_text(report, color_enabled()));
    return 0;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_frames(const std::string& path, const std::string& query_arg) {
  stc::ScenarioDocument doc;
  if (int rc = load_scenario(path, doc)) return rc;
  stc::QueryExpression query;
  if (int rc = resolve_query(doc, query_arg, query)) return rc;
  try {
    stc::FramesReport report = stc::build_frames_report(doc.scenario, query);
    std::cout << stc::render_text(report, color_enabled());
    return 0;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_examples(const std::string& name, const std::string& out_path) {
  auto text = stc::bundled_scenario_text(name);
  if (!text) {
    std::ostringstream os;
    os << "unknown example '" << name << "'; available:";
    for (const auto& n : stc::bundled_scenario_names()) os << " " << n;
    return fail(os.str());
  }
  if (out_path.empty()) {
    std::cout << *text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return fail("cannot write file: " + out_path);
  out << *text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"space-time counterfactual evaluator"};
  app.require_subcommand(1);

  std::string file, query_arg, example_name, out_path;
  bool structured = false;

  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate a query; prints TRUE or FALSE (exit 0/1)");
  eval->add_option("file", file, "scenario file (.stc)")->required();
  eval->add_option("query", query_arg, "stored query name or inline query")
      ->required();

  CLI::App* explain = app.add_subcommand(
      "explain", "Report phi-worlds, regions, support set and witnesses");
  explain->add_option("file", file)->required();
  explain->add_option("query", query_arg)->required();
  explain->add_flag("--structured", structured,
                    "emit machine-readable JSON (schema stc.explain/1)");

  CLI::App* frames = app.add_subcommand(
      "frames", "Verdict table over all realizable frame orderings (1+1)");
  frames->add_option("file", file)->required();
  frames->add_option("query", query_arg)->required();

  CLI::App* examples =
      app.add_subcommand("examples", "Write a bundled scenario file");
  examples->add_option("name", example_name, "bundled scenario name")
      ->required();
  examples->add_option("-o,--output", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  if (eval->parsed()) return cmd_eval(file, query_arg);
  if (explain->parsed()) return cmd_explain(file, query_arg, structured);
  if (frames->parsed()) return cmd_frames(file, query_arg);
  if (examples->parsed()) return cmd_examples(example_name, out_path);
  return kExitError;
}
