#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gardenhose {

enum class ErrorCode {
  duplicate_endpoint,
  self_loop,
  endpoint_out_of_range,
  tap_on_bob_side,
  invalid_wiring,
  dimension_mismatch,
  malformed_message,
  partial_table,
  inconsistent_tree,
  layout_too_large,
  reversibility_violation,
  nonterminating_run,
  cap_exceeded,
  model_violates_matching,
  seed_space_too_large,
  parse_error,
  invalid_argument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_endpoint: return "DUPLICATE_ENDPOINT";
    case ErrorCode::self_loop: return "SELF_LOOP";
    case ErrorCode::endpoint_out_of_range: return "ENDPOINT_OUT_OF_RANGE";
    case ErrorCode::tap_on_bob_side: return "TAP_ON_BOB_SIDE";
    case ErrorCode::invalid_wiring: return "INVALID_WIRING";
    case ErrorCode::dimension_mismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::malformed_message: return "MALFORMED_MESSAGE";
    case ErrorCode::partial_table: return "PARTIAL_TABLE";
    case ErrorCode::inconsistent_tree: return "INCONSISTENT_TREE";
    case ErrorCode::layout_too_large: return "LAYOUT_TOO_LARGE";
    case ErrorCode::reversibility_violation: return "REVERSIBILITY_VIOLATION";
    case ErrorCode::nonterminating_run: return "NONTERMINATING_RUN";
    case ErrorCode::cap_exceeded: return "CAP_EXCEEDED";
    case ErrorCode::model_violates_matching: return "MODEL_VIOLATES_MATCHING";
    case ErrorCode::seed_space_too_large: return "SEED_SPACE_TOO_LARGE";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// Exception carrying a machine-checkable error code. Every failure the
/// library reports goes through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Raised by the text-format readers; the message always names line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail)
      : Error(ErrorCode::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gardenhose
