#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gammalab {

  enum class ErrorCode {
    wrong_shape,
    out_of_range,
    size_mismatch,
    length_mismatch,
    sum_exceeds_one,
    invalid_grade,
    alpha_out_of_range,
    carrier_too_large,
    arity_mismatch,
    hypothesis_failed,
    parse_error,
  };

  constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
      case ErrorCode::wrong_shape: return "WRONG_SHAPE";
      case ErrorCode::out_of_range: return "OUT_OF_RANGE";
      case ErrorCode::size_mismatch: return "SIZE_MISMATCH";
      case ErrorCode::length_mismatch: return "LENGTH_MISMATCH";
      case ErrorCode::sum_exceeds_one: return "SUM_EXCEEDS_ONE";
      case ErrorCode::invalid_grade: return "INVALID_GRADE";
      case ErrorCode::alpha_out_of_range: return "ALPHA_OUT_OF_RANGE";
      case ErrorCode::carrier_too_large: return "CARRIER_TOO_LARGE";
      case ErrorCode::arity_mismatch: return "ARITY_MISMATCH";
      case ErrorCode::hypothesis_failed: return "HYPOTHESIS_FAILED";
      case ErrorCode::parse_error: return "PARSE_ERROR";
    }
    return "UNKNOWN";
  }

  // Every failure surfaced by the library carries one of the codes above.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": "
                             + message),
          _code(code),
          _message(message) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    // what() without the code prefix.
    std::string const& message() const noexcept {
      return _message;
    }

   private:
    ErrorCode   _code;
    std::string _message;
  };

}  // namespace gammalab
