#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dprelia {

// Bad arguments: empty vectors, out-of-range parameters, mismatched lengths.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A sample with no usable spread (e.g. pooled deviation zero), as opposed
// to a genuine zero effect.
class DegenerateSample : public std::domain_error {
 public:
  explicit DegenerateSample(const std::string& what) : std::domain_error(what) {}
};

// required_runs(0): no finite number of runs gives the test power.
class InfiniteRuns : public std::domain_error {
 public:
  explicit InfiniteRuns(const std::string& what) : std::domain_error(what) {}
};

// Every Renyi order saturated or otherwise failed to produce a bound.
class AccountingError : public std::runtime_error {
 public:
  explicit AccountingError(const std::string& what) : std::runtime_error(what) {}
};

// Noise calibration target unreachable inside the search bracket.
class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

// Rejected training configuration (e.g. noise without clipping).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite parameters encountered while training; carries the step index.
class DivergedRun : public std::runtime_error {
 public:
  DivergedRun(std::size_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Record sets that cannot be paired; the message lists orphan keys.
class PairingError : public std::runtime_error {
 public:
  explicit PairingError(const std::string& what) : std::runtime_error(what) {}
};

// Checklist grading asked for declared answers that were not supplied.
class GradingError : public std::runtime_error {
 public:
  explicit GradingError(const std::string& what) : std::runtime_error(what) {}
};

// File read/write failure.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dprelia
