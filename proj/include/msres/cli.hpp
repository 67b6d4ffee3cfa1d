#pragma once

#include <iosfwd>
#include <string_view>

namespace msres {

/// Entry point of the msres tool. Returns 0 on success, 1 for input errors
/// and 2 when an internal identity check fails.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses "2,1,0" or "(2,1,0)".
class DeltaIndex;
DeltaIndex parse_delta(std::string_view text);

}  // namespace msres
