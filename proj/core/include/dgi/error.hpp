#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgi {

enum class ErrorCode {
  kInvalidLabel,
  kLoopArc,
  kDanglingEndpoint,
  kUnknownVertex,
  kUnknownArc,
  kNotAWalk,
  kClosedWalkInput,
  kNotClosed,
  kNoCycleExtractable,
  kCyclicGraph,
  kTooLargeForExhaustive,
  kNoEligibleVertex,
  kNotAPartition,
  kNoArborescence,
  kUnknownFixture,
  kParseError,
};

// All library failures surface as Error (or a subclass carrying extra
// context). The code disambiguates programmatically; what() is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by operations that require an acyclic input; carries one witness
// cycle as a closed vertex sequence (first == last).
class CyclicGraphError : public Error {
 public:
  CyclicGraphError(const std::string& message, std::vector<std::string> cycle)
      : Error(ErrorCode::kCyclicGraph, message), cycle_(std::move(cycle)) {}

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dgi
