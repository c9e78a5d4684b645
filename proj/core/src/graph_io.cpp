#include "dgi/graph_io.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "dgi/error.hpp"

namespace dgi {
namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::string trimmed(line.substr(0, line.find('#')));
  std::istringstream stream(trimmed);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

Digraph parse_graph_text(std::string_view text, const ParseOptions& options,
                         std::vector<std::string>* warnings) {
  std::vector<VertexId> vertices;
  std::vector<Arc> arcs;
  std::vector<std::size_t> arc_lines;

  std::istringstream input{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    const std::vector<std::string> tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (tokens.front() == "vertex") {
      if (tokens.size() != 2) {
        throw ParseError(line_number, "expected 'vertex <label>'");
      }
      vertices.push_back(tokens[1]);
    } else if (tokens.front() == "arc") {
      if (tokens.size() != 3) {
        throw ParseError(line_number, "expected 'arc <tail> <head>'");
      }
      if (tokens[1] == tokens[2]) {
        throw Error(ErrorCode::kLoopArc, "line " + std::to_string(line_number) +
                                             ": loop arc (" + tokens[1] + ", " +
                                             tokens[2] + ")");
      }
      arcs.push_back({tokens[1], tokens[2]});
      arc_lines.push_back(line_number);
    } else {
      throw ParseError(line_number, "unknown directive '" + tokens.front() +
                                        "' (expected 'vertex' or 'arc')");
    }
  }

  if (!options.auto_declare_endpoints) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (const VertexId& end : {arcs[i].tail, arcs[i].head}) {
        bool declared = false;
        for (const VertexId& v : vertices) {
          if (v == end) {
            declared = true;
            break;
          }
        }
        if (!declared) {
          throw Error(ErrorCode::kDanglingEndpoint,
                      "line " + std::to_string(arc_lines[i]) +
                          ": undeclared endpoint '" + end + "'");
        }
      }
    }
  }

  BuildOptions build_options;
  build_options.auto_declare_endpoints = options.auto_declare_endpoints;
  Digraph g = Digraph::build(vertices, arcs, build_options, warnings);
  if (g.empty()) {
    throw ParseError(line_number == 0 ? 1 : line_number,
                     "input declares no vertices");
  }
  return g;
}

std::string serialize_graph_text(const Digraph& g) {
  std::ostringstream out;
  for (const VertexId& v : g.vertices()) out << "vertex " << v << "\n";
  for (const Arc& a : g.arcs()) out << "arc " << a.tail << " " << a.head << "\n";
  return out.str();
}

std::string serialize_dot(const Digraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (const VertexId& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const Arc& a : g.arcs()) {
    out << "  \"" << a.tail << "\" -> \"" << a.head << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dgi
