#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpg {

// Input text does not follow the presentation grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// H1 of the input is nonzero where a perfect group is required.
class NotPerfect : public std::runtime_error {
 public:
  explicit NotPerfect(const std::string& h1)
      : std::runtime_error("presentation is not perfect: H1 = " + h1), h1_(h1) {}
  const std::string& h1() const noexcept { return h1_; }

 private:
  std::string h1_;
};

class CosetLimitExceeded : public std::runtime_error {
 public:
  explicit CosetLimitExceeded(std::size_t limit)
      : std::runtime_error("coset enumeration did not close within " +
                           std::to_string(limit) + " cosets"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class SchemeExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested bound exceeds the range in which the simple-group catalog is complete.
class CatalogBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fpg
