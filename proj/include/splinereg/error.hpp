#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splinereg {

/// Every failure the library can signal. The enumerator name is what the CLI
/// prints, so downstream tooling can match on it.
enum class ErrorKind {
  InvalidSlopeCount,
  DuplicateSlope,
  NotArtinian,
  TrivialIdeal,
  NonMonotone,
  SocleMismatch,
  ParseError,
  DegenerateTriangle,
  NotConnected,
  NonzeroGenus,
  SlopeClashAssumption,
  AlphaUndefined,
  NotOneEdge,
  ExtraInteriorVertex,
  CapExceeded,
  RouteDisagreement,
  HypothesisViolated,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidSlopeCount: return "InvalidSlopeCount";
    case ErrorKind::DuplicateSlope: return "DuplicateSlope";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::TrivialIdeal: return "TrivialIdeal";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::SocleMismatch: return "SocleMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NonzeroGenus: return "NonzeroGenus";
    case ErrorKind::SlopeClashAssumption: return "SlopeClashAssumption";
    case ErrorKind::AlphaUndefined: return "AlphaUndefined";
    case ErrorKind::NotOneEdge: return "NotOneEdge";
    case ErrorKind::ExtraInteriorVertex: return "ExtraInteriorVertex";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::RouteDisagreement: return "RouteDisagreement";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace splinereg
