#pragma once

#include <stdexcept>
#include <string>

namespace dstkit {

// Base for contract violations (bad input, malformed data). CLI exit code 1.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Base for environment failures (endpoint down, missing key). CLI exit code 2.
class EnvironmentError : public std::runtime_error {
 public:
  explicit EnvironmentError(const std::string& msg) : std::runtime_error(msg) {}
};

class MalformedLineError : public ContractError {
 public:
  MalformedLineError(int line_no, const std::string& line, const std::string& why)
      : ContractError("MALFORMED_LINE(" + std::to_string(line_no) + "): " + why +
                      ": " + line),
        line_no_(line_no) {}
  int line_no() const { return line_no_; }

 private:
  int line_no_;
};

class DuplicateDialogueIdError : public ContractError {
 public:
  explicit DuplicateDialogueIdError(const std::string& id)
      : ContractError("DUPLICATE_DIALOGUE_ID: " + id) {}
};

class EmptyCorpusError : public ContractError {
 public:
  EmptyCorpusError() : ContractError("EMPTY_CORPUS") {}
};

class DimensionMismatchError : public ContractError {
 public:
  DimensionMismatchError(int expected, int got)
      : ContractError("DIMENSION_MISMATCH: expected " + std::to_string(expected) +
                      ", got " + std::to_string(got)) {}
};

class EndpointError : public EnvironmentError {
 public:
  EndpointError(int status, const std::string& body)
      : EnvironmentError("ENDPOINT_ERROR(" + std::to_string(status) + "): " + body),
        status_(status) {}
  int status() const { return status_; }

 private:
  int status_ = 0;
};

class TimeoutError : public EnvironmentError {
 public:
  explicit TimeoutError(const std::string& what) : EnvironmentError("TIMEOUT: " + what) {}
};

class MissingApiKeyError : public EnvironmentError {
 public:
  explicit MissingApiKeyError(const std::string& env_var)
      : EnvironmentError("missing API key: environment variable " + env_var +
                         " is not set") {}
};

// Thrown when a practical-mode code path touches a query's gold state change.
class PracticalModeViolation : public std::logic_error {
 public:
  PracticalModeViolation()
      : std::logic_error("gold state change accessed on a gold-restricted query") {}
};

class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& trace)
      : std::runtime_error("DIVERGENCE: training loss became non-finite\n" + trace) {}
};

}  // namespace dstkit
