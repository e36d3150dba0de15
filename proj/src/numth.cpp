#include "qcenum/numth.hpp"

#include "qcenum/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace qcenum {

Factorization::Factorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].exponent == 0 || !is_prime(factors_[k].prime) ||
        (k > 0 && factors_[k - 1].prime >= factors_[k].prime))
      fail(ErrorKind::InvalidArgument, "malformed factorization");
  }
}

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto &[p, a] : factors_) {
    const std::uint64_t pa = checked_pow(p, a);
    if (v > std::numeric_limits<std::uint64_t>::max() / pa)
      fail(ErrorKind::InvalidArgument, "factorization value overflows");
    v *= pa;
  }
  return v;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1)
      result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0)
      return n == p;
  }
  // Miller-Rabin with these bases is deterministic below 3.3e24.
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned k = 1; k < r; ++k) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t n) {
  const Factorization f = factorize(n);
  if (f.size() != 1)
    return {0, 0};
  return {f.factors()[0].prime, f.factors()[0].exponent};
}

Factorization factorize(std::uint64_t n) {
  if (n == 0)
    fail(ErrorKind::InvalidArgument, "cannot factorize 0");
  std::vector<PrimePower> out;
  auto take = [&](std::uint64_t p) {
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a)
      out.push_back({p, a});
    return a > 0;
  };
  take(2);
  bool cofactor_prime = is_prime(n);
  for (std::uint64_t p = 3; !cofactor_prime && p <= n / p; p += 2) {
    if (take(p))
      cofactor_prime = is_prime(n);
  }
  if (n > 1)
    out.push_back({n, 1});
  return Factorization(std::move(out));
}

std::vector<std::uint64_t> divisors(const Factorization &f) {
  std::vector<std::uint64_t> out{1};
  for (const auto &[p, a] : f.factors()) {
    const std::size_t prev = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < prev; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  return divisors(factorize(n));
}

int moebius(std::uint64_t m) {
  const Factorization f = factorize(m);
  for (const auto &pp : f.factors())
    if (pp.exponent > 1)
      return 0;
  return f.size() % 2 ? -1 : 1;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  const std::uint64_t g = gcd(a, b);
  const std::uint64_t a_red = a / g;
  if (a_red > std::numeric_limits<std::uint64_t>::max() / b)
    fail(ErrorKind::InvalidArgument, "lcm overflows 64 bits");
  return a_red * b;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < exp; ++k) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      fail(ErrorKind::InvalidParameter,
           std::to_string(base) + "^" + std::to_string(exp) +
               " does not fit in 64 bits");
    r *= base;
  }
  return r;
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t q,
                                            std::uint64_t modulus) {
  if (modulus == 0 || gcd(q % modulus, modulus) != 1)
    fail(ErrorKind::InvalidModulus, "q and N must be coprime");
  if (i >= modulus)
    fail(ErrorKind::InvalidArgument, "residue out of range");
  std::vector<std::uint64_t> orbit{i};
  for (std::uint64_t x = mulmod(i, q, modulus); x != i;
       x = mulmod(x, q, modulus))
    orbit.push_back(x);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::uint64_t coset_representative(std::uint64_t i, std::uint64_t q,
                                   std::uint64_t modulus) {
  return cyclotomic_coset(i, q, modulus).front();
}

CodeSpec validate_spec(std::uint64_t q, unsigned n,
                       const std::vector<std::uint64_t> &zeros) {
  if (q < 2 || prime_power_decomposition(q).first == 0)
    fail(ErrorKind::InvalidParameter,
         "q = " + std::to_string(q) + " is not a prime power");
  if (n < 2)
    fail(ErrorKind::InvalidParameter, "n must be at least 2");
  if (zeros.empty())
    fail(ErrorKind::InvalidParameter, "at least one zero is required");
  CodeSpec spec;
  spec.q = q;
  spec.n = n;
  spec.N = checked_pow(q, n) - 1;
  std::vector<std::uint64_t> raw;
  for (std::uint64_t i : zeros) {
    if (i < 1 || i >= spec.N)
      fail(ErrorKind::InvalidParameter,
           "zero " + std::to_string(i) + " outside [1, " +
               std::to_string(spec.N - 1) + "]");
    const auto coset = cyclotomic_coset(i, q, spec.N);
    if (coset.size() < n)
      throw ShortCosetError(i, coset.size());
    for (std::size_t k = 0; k < spec.zeros.size(); ++k)
      if (spec.zeros[k] == coset.front())
        throw DuplicateCosetError(raw[k], i);
    spec.zeros.push_back(coset.front());
    raw.push_back(i);
  }
  return spec;
}

} // namespace qcenum
