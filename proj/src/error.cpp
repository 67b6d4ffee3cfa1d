#include "msres/error.hpp"

namespace msres {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::division_not_exact: return "DivisionNotExact";
    case Errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::both_zero: return "BothZero";
    case Errc::not_square: return "NotSquare";
    case Errc::zero_or_constant_polynomial: return "ZeroOrConstantPolynomial";
    case Errc::both_constant: return "BothConstant";
    case Errc::bad_dimensions: return "BadDimensions";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::delta_too_large: return "DeltaTooLarge";
    case Errc::negative_delta0: return "NegativeDelta0";
    case Errc::degree_too_high: return "DegreeTooHigh";
    case Errc::repeated_roots: return "RepeatedRoots";
    case Errc::internal_non_monic: return "InternalNonMonic";
    case Errc::constant_input: return "ConstantInput";
    case Errc::variable_mismatch: return "VariableMismatch";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::consistency_failure: return "ConsistencyFailure";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_symbol: return "UnknownSymbol";
  }
  return "Unknown";
}

bool is_internal(Errc code) {
  return code == Errc::division_not_exact || code == Errc::internal_non_monic ||
         code == Errc::consistency_failure;
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(Errc code, std::size_t position, const std::string& what)
    : Error(code, what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

}  // namespace msres
