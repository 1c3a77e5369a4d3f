#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace webgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Corrupt, truncated or unrecognized binary cache.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Power-law fit cannot be attempted on the given data (degenerate support, too few samples).
class FitError : public Error {
 public:
  using Error::Error;
};

/// A numeric procedure failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A scalar statistic that may be mathematically undefined on a given input
/// (zero denominators). Undefined values keep the reason instead of a fake 0.
class Stat {
 public:
  Stat() = default;
  static Stat of(double v) {
    Stat s;
    s.value_ = v;
    s.defined_ = true;
    return s;
  }
  static Stat undefined(std::string reason) {
    Stat s;
    s.reason_ = std::move(reason);
    return s;
  }

  bool defined() const noexcept { return defined_; }
  explicit operator bool() const noexcept { return defined_; }

  double value() const {
    if (!defined_) throw NumericError("undefined statistic: " + reason_);
    return value_;
  }
  double value_or(double fallback) const noexcept { return defined_ ? value_ : fallback; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  double value_ = std::numeric_limits<double>::quiet_NaN();
  bool defined_ = false;
  std::string reason_;
};

}  // namespace webgraph
