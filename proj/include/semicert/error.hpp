#pragma once

/**
 * @file error.hpp
 * @brief Exception type shared by every semicert module.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace semicert {

enum class errc {
  tag_mismatch,
  dimension_mismatch,
  invert_zero,
  too_few_elements,
  not_zero_sum_free,
  unsupported_carrier,
  not_applicable,
  membership_detected,
  invalid_descriptor,
  invalid_argument,
  parse_error,
  internal_invariant,  // a construction violated its own postcondition
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::tag_mismatch: return "TagMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invert_zero: return "InvertZero";
    case errc::too_few_elements: return "TooFewElements";
    case errc::not_zero_sum_free: return "NotZeroSumFree";
    case errc::unsupported_carrier: return "UnsupportedCarrier";
    case errc::not_applicable: return "NotApplicable";
    case errc::membership_detected: return "MembershipDetected";
    case errc::invalid_descriptor: return "InvalidDescriptor";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
    case errc::internal_invariant: return "InternalInvariant";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Line/column addressed failure while reading an instance file or token.
class parse_error : public error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : error(errc::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace semicert
