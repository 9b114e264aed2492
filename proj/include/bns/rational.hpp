#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bns {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Exact rational, always in lowest terms with a positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" (q != 0). Whitespace is not accepted.
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

inline bool is_zero(const Rat& value) { return value.is_zero(); }

}  // namespace bns
