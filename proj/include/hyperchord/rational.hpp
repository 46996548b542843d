#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hyperchord {

// Exact rational arithmetic everywhere; no floating point in the core.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "3", "-7" or "3/4". Throws std::invalid_argument on malformed input or
// zero denominator.
Rat rat_from_string(std::string_view text);

// Canonical form: "num" when the denominator is 1, else "num/den".
std::string rat_to_string(const Rat& value);

}  // namespace hyperchord
