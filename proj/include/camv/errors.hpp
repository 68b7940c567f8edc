#pragma once

#include <stdexcept>
#include <string>

namespace camv {

// Domain violations use std::domain_error, bad arguments std::invalid_argument.
// The types below cover the failure classes that callers handle separately.

/// Profile or mesh construction produced (or would produce) invalid geometry.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `row` is 1-based (header is row 1), 0 when unknown.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t row = 0, bool annotate = true)
      : std::runtime_error(row && annotate ? what + " (row " + std::to_string(row) + ")" : what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Pattern has no usable power (all-zero) for the requested metric.
class DegeneratePatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature grid too coarse for the requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario/config problem, tagged with the JSON pointer of the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string json_path, const std::string& what)
      : std::runtime_error(what), path_(std::move(json_path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// I/O failure with the offending path in the message.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace camv
