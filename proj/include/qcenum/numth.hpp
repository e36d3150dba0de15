#pragma once

// Integer number theory for code parameters: factorization, divisor
// lattices, Moebius function and q-cyclotomic cosets.

#include <cstdint>
#include <utility>
#include <vector>

namespace qcenum {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower &) const = default;
};

/// Prime factorization sorted by increasing prime. Empty for 1.
class Factorization {
public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower> &factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// Product of all prime powers. Throws on 64-bit overflow.
  std::uint64_t value() const;

  bool operator==(const Factorization &) const = default;

private:
  std::vector<PrimePower> factors_;
};

bool is_prime(std::uint64_t n);

/// If n = p^k for a prime p and k >= 1, returns {p, k}; otherwise {0, 0}.
std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t n);

Factorization factorize(std::uint64_t n);

/// All divisors of the factored integer, ascending.
std::vector<std::uint64_t> divisors(const Factorization &f);
std::vector<std::uint64_t> divisors(std::uint64_t n);

int moebius(std::uint64_t m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Throws InvalidArgument when the result does not fit in 64 bits.
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// base^exp, throwing InvalidParameter on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Orbit {i q^k mod N}, ascending. Throws InvalidModulus unless gcd(q, N) = 1.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t q,
                                            std::uint64_t modulus);

/// Smallest member of the coset, without materializing the orbit.
std::uint64_t coset_representative(std::uint64_t i, std::uint64_t q,
                                   std::uint64_t modulus);

/// Validated parameters of the cyclic code of length N = q^n - 1.
struct CodeSpec {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::uint64_t N = 0;
  /// Canonical (smallest) coset representatives, in input order.
  std::vector<std::uint64_t> zeros;

  std::size_t s() const { return zeros.size(); }
  bool operator==(const CodeSpec &) const = default;
};

/// Checks that q is a prime power, n >= 2, q^n fits in 64 bits, and that
/// every zero lies in [1, N-1] with a full-size coset distinct from the
/// others. Throws ShortCosetError, DuplicateCosetError or InvalidParameter.
CodeSpec validate_spec(std::uint64_t q, unsigned n,
                       const std::vector<std::uint64_t> &zeros);

} // namespace qcenum
