#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace srgec {

enum class ErrorKind {
  InvalidEdge,
  LoopRejected,
  InvalidVertex,
  ParseError,
  Unsupported,
  ParameterRange,
  NotPrime,
  InvalidInput,
  Infeasible,
  CompleteGraph,
  NotApplicable,
  Precondition,
  NotHoffman,
  NotSpread,
  DisjointCliques,
  GraphMismatch,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ParameterRange: return "ParameterRange";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::CompleteGraph: return "CompleteGraph";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::NotHoffman: return "NotHoffman";
    case ErrorKind::NotSpread: return "NotSpread";
    case ErrorKind::DisjointCliques: return "DisjointCliques";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
  }
  return "Unknown";
}

// Single exception type for the library. `position` carries the byte offset
// (graph6) or 1-based line number (text formats) for parse failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        message_(what),
        position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::optional<std::size_t> position_;
};

}  // namespace srgec
