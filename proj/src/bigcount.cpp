#include "qcenum/bigcount.hpp"

#include "qcenum/error.hpp"

namespace qcenum {

BigCount parse_decimal(std::string_view text) {
  if (text.empty())
    fail(ErrorKind::InvalidArgument, "empty decimal string");
  BigCount x = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      fail(ErrorKind::InvalidArgument,
           "not a decimal number: " + std::string(text));
    x = x * 10 + (c - '0');
  }
  return x;
}

BigCount big_pow(const BigCount &base, unsigned exp) {
  BigCount result = 1;
  BigCount b = base;
  while (exp) {
    if (exp & 1)
      result *= b;
    exp >>= 1;
    if (exp)
      b *= b;
  }
  return result;
}

} // namespace qcenum
