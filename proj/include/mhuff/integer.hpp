#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mhuff {

/// Exact arbitrary-precision integer used for every weight, coefficient and cost.
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& value);

/// Parses an optionally signed decimal literal; throws std::invalid_argument otherwise.
Integer parse_integer(std::string_view text);

/// Returns numerator / denominator and throws std::logic_error when the remainder is nonzero.
/// `what` names the identity being evaluated so a failure is traceable.
Integer exact_divide(const Integer& numerator, const Integer& denominator, std::string_view what);

}  // namespace mhuff
