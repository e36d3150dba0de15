#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcenum {

enum class ErrorKind {
  InvalidParameter,
  InvalidArgument,
  InvalidModulus,
  ShortCoset,
  DuplicateCoset,
  CapExceeded,
  VerificationFailure,
};

/// Stable name used on the CLI diagnostic stream ("ShortCoset", ...).
const char *error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char *name() const { return error_name(kind_); }

private:
  ErrorKind kind_;
};

class ShortCosetError : public Error {
public:
  ShortCosetError(std::uint64_t zero, std::uint64_t coset_size);

  std::uint64_t zero() const { return zero_; }
  std::uint64_t coset_size() const { return size_; }

private:
  std::uint64_t zero_;
  std::uint64_t size_;
};

class DuplicateCosetError : public Error {
public:
  DuplicateCosetError(std::uint64_t first, std::uint64_t second);

  std::uint64_t first() const { return first_; }
  std::uint64_t second() const { return second_; }

private:
  std::uint64_t first_;
  std::uint64_t second_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
  throw Error(kind, what);
}

} // namespace qcenum
