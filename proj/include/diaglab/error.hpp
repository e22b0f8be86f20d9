#ifndef DIAGLAB_ERROR_HPP
#define DIAGLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace diaglab {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the formula parser; line/col are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", col " +
              std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Raised by the DPI document loader.
class FormatError : public Error {
 public:
  FormatError(const std::string& msg, int line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A measurement outcome invalidated every diagnosis of a sample; the caller
// should draw a fresh sample.
class SampleExhausted : public Error {
 public:
  explicit SampleExhausted(const std::string& msg) : Error(msg) {}
};

// No informative measurement point exists for the current sample even after
// enlarging the candidate universe.
class PoolExhausted : public Error {
 public:
  explicit PoolExhausted(const std::string& msg) : Error(msg) {}
};

// The synthetic generator ran out of attempts; carries the closest diagnosis
// count it achieved.
class GenBudgetExhausted : public Error {
 public:
  GenBudgetExhausted(const std::string& msg, std::size_t nearest)
      : Error(msg), nearest_(nearest) {}
  std::size_t nearest() const { return nearest_; }

 private:
  std::size_t nearest_;
};

}  // namespace diaglab

#endif
