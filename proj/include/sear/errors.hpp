#pragma once

#include <stdexcept>
#include <string>

namespace sear {

enum class ErrorKind {
  Contract,           // precondition broken by the caller
  MalformedPlan,      // non-monotone waypoint times and similar
  InvalidInstance,    // configuration invariant violated
  UndefinedStatistic, // statistic needs more robots than provided
  InfeasibleDensity,  // rejection sampling budget exhausted
  InvalidEdgeLength,  // edge length below the kind-specific bound
  OutOfCoverage,      // query point outside the covered region
  Partition,          // grid too small to form a figure-8 cell
  AssignmentConflict, // injectivity of the label->vertex map violated
  Routing,            // discrete router failed
  OracleTooLarge,     // brute-force search budget exceeded
  Validation,         // emitted plan failed validation
  Schema,             // malformed JSON input
  Io,                 // file system failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string payload = {})
      : std::runtime_error(message), kind_(kind), payload_(std::move(payload)) {}

  ErrorKind kind() const { return kind_; }
  // Optional machine-readable attachment (e.g. a discrete instance for
  // reproducing a router failure).
  const std::string& payload() const { return payload_; }

 private:
  ErrorKind kind_;
  std::string payload_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace sear
