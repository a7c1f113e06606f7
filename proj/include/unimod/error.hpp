#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unimod {

enum class ErrorKind {
  Dimension,
  RankDeficient,
  NotPositiveDefinite,
  Format,
  Precondition,
  DataIntegrity,
  GlueCode,
  UnknownId,
  Parse,
  Precision,
  Extraction,
  Classification,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::NotPositiveDefinite: return "not-positive-definite";
    case ErrorKind::Format: return "format";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::DataIntegrity: return "data-integrity";
    case ErrorKind::GlueCode: return "glue-code";
    case ErrorKind::UnknownId: return "unknown-id";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Extraction: return "extraction";
    case ErrorKind::Classification: return "classification";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::Parse,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace unimod
