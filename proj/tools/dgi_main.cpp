// Command-line front end: analyze a digraph file, reproduce the reference
// networks D1..D6, or emit a stored fixture.
//
// Exit codes: 0 success (and reproduce without MISMATCH), 1 reproduce found a
// MISMATCH, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dgi/error.hpp"
#include "dgi/fixtures.hpp"
#include "dgi/graph_io.hpp"
#include "dgi/report.hpp"
#include "dgi/reproduce.hpp"

namespace {

int run_analyze(const std::string& path, bool as_json) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();

  std::vector<std::string> warnings;
  dgi::Digraph g = dgi::parse_graph_text(buffer.str(), {}, &warnings);
  for (const std::string& warning : warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  const dgi::AnalysisReport report = dgi::analyze(g);
  std::cout << (as_json ? dgi::render_json(report) : dgi::render_text(report));
  return 0;
}

int run_reproduce(const std::string& selector, bool as_json) {
  const dgi::ReproductionResult result =
      selector == "ALL" ? dgi::reproduce_all()
                        : dgi::reproduce(dgi::fixture_id(selector));
  std::cout << (as_json ? dgi::render_json(result) : dgi::render_text(result));
  return result.has_mismatch() ? 1 : 0;
}

int run_fixture(const std::string& name, bool as_dot) {
  const dgi::NetworkFixture& f = dgi::fixture(dgi::fixture_id(name));
  std::cout << (as_dot ? dgi::serialize_dot(f.digraph, f.name)
                       : dgi::serialize_graph_text(f.digraph));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact digraph invariants with reference-network reproduction"};
  app.require_subcommand(1);

  std::string analyze_path;
  bool analyze_json = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "full invariant report for a digraph file");
  analyze_cmd->add_option("file", analyze_path, "graph in the text format")
      ->required();
  analyze_cmd->add_flag("--json", analyze_json, "emit the JSON schema");

  std::string selector = "ALL";
  bool reproduce_json = false;
  CLI::App* reproduce_cmd = app.add_subcommand(
      "reproduce", "recompute every recorded claim about the fixtures");
  reproduce_cmd->add_option("--fixture", selector, "D1..D6 or ALL (default ALL)");
  reproduce_cmd->add_flag("--json", reproduce_json, "emit the JSON schema");

  std::string fixture_name;
  bool fixture_emit = false;
  bool fixture_dot = false;
  CLI::App* fixture_cmd =
      app.add_subcommand("fixture", "print a stored fixture digraph");
  fixture_cmd->add_option("name", fixture_name, "fixture name D1..D6")
      ->required();
  fixture_cmd->add_flag("--emit", fixture_emit, "emit the graph text format");
  fixture_cmd->add_flag("--dot", fixture_dot, "emit DOT instead of graph text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(analyze_path, analyze_json);
    if (reproduce_cmd->parsed()) return run_reproduce(selector, reproduce_json);
    if (fixture_cmd->parsed()) return run_fixture(fixture_name, fixture_dot);
  } catch (const dgi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
