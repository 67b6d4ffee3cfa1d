#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msres {

enum class Errc {
  division_not_exact,
  zero_leading_coefficient,
  zero_polynomial,
  both_zero,
  not_square,
  zero_or_constant_polynomial,
  both_constant,
  bad_dimensions,
  length_mismatch,
  index_out_of_range,
  delta_too_large,
  negative_delta0,
  degree_too_high,
  repeated_roots,
  internal_non_monic,
  constant_input,
  variable_mismatch,
  invalid_argument,
  consistency_failure,
  parse_error,
  unknown_symbol,
};

const char* errc_name(Errc code);

// Internal errors mean a theorem-guaranteed identity did not hold; they are
// reported with a distinct exit status by the command-line tool.
bool is_internal(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace msres
