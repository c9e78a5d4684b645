#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dgi/digraph.hpp"

namespace dgi {

// Line-oriented text format, the smallest one that round-trips an arc list:
//
//   # comment (also allowed after a directive)
//   vertex <label>
//   arc <tail> <head>
//
// Arcs auto-declare unseen endpoints in appearance order unless disabled.
// Labels are whitespace-free tokens; '#' starts a comment anywhere.

struct ParseOptions {
  bool auto_declare_endpoints = true;
};

// ParseError carries the offending line number. Loop arcs raise LoopArc;
// with auto-declaration off, an undeclared endpoint raises DanglingEndpoint.
// Input with no vertices at all is a ParseError. Duplicate arcs are dropped
// and reported through `warnings`.
Digraph parse_graph_text(std::string_view text, const ParseOptions& options = {},
                         std::vector<std::string>* warnings = nullptr);

// Vertex lines in insertion order, then arc lines in insertion order;
// parse_graph_text(serialize_graph_text(g)) reproduces g exactly.
std::string serialize_graph_text(const Digraph& g);

// DOT rendering. Emit-only: there is no DOT parser here.
std::string serialize_dot(const Digraph& g, std::string_view name = "D");

}  // namespace dgi
