#include "qcenum/error.hpp"

namespace qcenum {

const char *error_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidParameter:
    return "InvalidParameter";
  case ErrorKind::InvalidArgument:
    return "InvalidArgument";
  case ErrorKind::InvalidModulus:
    return "InvalidModulus";
  case ErrorKind::ShortCoset:
    return "ShortCoset";
  case ErrorKind::DuplicateCoset:
    return "DuplicateCoset";
  case ErrorKind::CapExceeded:
    return "CapExceeded";
  case ErrorKind::VerificationFailure:
    return "VerificationFailure";
  }
  return "Error";
}

ShortCosetError::ShortCosetError(std::uint64_t zero, std::uint64_t coset_size)
    : Error(ErrorKind::ShortCoset,
            "ShortCoset(" + std::to_string(zero) + ", " +
                std::to_string(coset_size) + ")"),
      zero_(zero), size_(coset_size) {}

DuplicateCosetError::DuplicateCosetError(std::uint64_t first,
                                         std::uint64_t second)
    : Error(ErrorKind::DuplicateCoset,
            "DuplicateCoset(" + std::to_string(first) + ", " +
                std::to_string(second) + ")"),
      first_(first), second_(second) {}

} // namespace qcenum
