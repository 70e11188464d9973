#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace latmorse {

/// Exact rational scalar.  Every topology decision in the 1D oracle is made
/// with these; no floating point anywhere near closure/interior logic.
using Rat = boost::rational<long long>;

/// Parses "p/q" or "p" (optionally signed).  Throws Error(ParseError).
Rat parse_rational(const std::string& s);

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rat& r);

}  // namespace latmorse
