#pragma once

// Explicit model of F_{p^m} for brute-force checks: polynomial basis over
// F_p, a designated primitive element and discrete-log tables.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qcenum {

/// Element of F_{p^m} in the polynomial basis 1, x, ..., x^(m-1). The code
/// is the coefficient list read as base-p digits, constant term lowest.
class FieldElement {
public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  auto operator<=>(const FieldElement &) const = default;

private:
  std::uint32_t code_ = 0;
};

/// Default limit on p^m for table construction.
inline constexpr std::uint64_t kFieldTableCap = std::uint64_t{1} << 20;

struct FieldOverrides {
  /// Monic irreducible of degree m, ascending coefficients (length m + 1).
  std::optional<std::vector<std::uint32_t>> modulus;
  /// Must have multiplicative order p^m - 1.
  std::optional<FieldElement> alpha;
};

class ExtField {
public:
  /// Deterministic by default: the modulus is the smallest monic
  /// irreducible with nonzero constant term (coefficients compared as
  /// base-p digits, constant term least significant) and alpha is the
  /// smallest element of full order. Throws InvalidArgument for composite
  /// p, CapExceeded above the cap, InvalidModulus for a reducible override.
  static ExtField build(std::uint32_t p, unsigned m,
                        const FieldOverrides &overrides = {},
                        std::uint64_t cap = kFieldTableCap);

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint32_t size() const { return size_; }
  /// p^m - 1
  std::uint32_t order() const { return size_ - 1; }
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }
  FieldElement alpha() const { return alpha_; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Multiplication by a prime-field scalar c in [0, p).
  FieldElement scale(FieldElement a, std::uint32_t c) const;
  FieldElement inv(FieldElement a) const;
  /// a^e; negative e requires a nonzero.
  FieldElement pow(FieldElement a, std::int64_t e) const;

  /// alpha^(k mod (p^m - 1)).
  FieldElement antilog(std::uint64_t k) const { return antilog_[k % order()]; }
  /// Exponent in [0, p^m - 2]; throws InvalidArgument for zero.
  std::uint32_t log(FieldElement a) const;

  /// a^(p^times)
  FieldElement frobenius(FieldElement a, unsigned times = 1) const;
  /// Tr_{F_{p^m}/F_p}(a) as a prime-field value in [0, p).
  std::uint32_t trace(FieldElement a) const { return trace_[a.code()]; }
  /// The same trace as an element of this field.
  FieldElement trace_to_base(FieldElement a) const {
    return FieldElement(trace_[a.code()]);
  }

  std::uint64_t multiplicative_order(FieldElement a) const;
  std::vector<FieldElement> primitive_elements() const;
  /// alpha^((p^m - 1) / (p^d - 1)), a primitive element of F_{p^d}.
  /// Throws InvalidArgument unless d | m.
  FieldElement subfield_generator(unsigned d) const;

  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> c) const;

private:
  ExtField() = default;

  std::uint32_t p_ = 0;
  unsigned m_ = 0;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElement alpha_;
  std::vector<std::uint32_t> log_;
  std::vector<FieldElement> antilog_;
  std::vector<std::uint32_t> trace_;
};

/// Irreducibility over F_p of a monic polynomial (ascending coefficients),
/// by the x^(p^m) = x and gcd(x^(p^(m/r)) - x, f) = 1 criterion.
bool is_irreducible(const std::vector<std::uint32_t> &f, std::uint32_t p);

} // namespace qcenum
