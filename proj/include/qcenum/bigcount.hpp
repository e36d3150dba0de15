#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace qcenum {

/// Exact nonnegative count. Never rounded, never overflows.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount &x) { return x.str(); }

/// Parses a nonempty string of decimal digits; throws InvalidArgument.
BigCount parse_decimal(std::string_view text);

BigCount big_pow(const BigCount &base, unsigned exp);

} // namespace qcenum
