#include "qcenum/gf.hpp"

#include "qcenum/error.hpp"
#include "qcenum/numth.hpp"

#include <string>

namespace qcenum {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

// Remainder of a modulo f (f nonzero, not necessarily monic).
Poly poly_mod(Poly a, const Poly &f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + p - c * f[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly &a, const Poly &b, const Poly &f, std::uint32_t p) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly &f, std::uint32_t p) {
  Poly result = poly_mod({1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1)
      result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e)
      base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly &b, std::uint32_t p) {
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// x^(p^k) mod f
Poly x_pow_p_pow(unsigned k, const Poly &f, std::uint32_t p) {
  Poly r = poly_mod({0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i)
    r = poly_powmod(r, p, f, p);
  return r;
}

Poly to_poly(std::uint32_t code, std::uint32_t p, unsigned m) {
  Poly c(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    c[i] = code % p;
    code /= p;
  }
  trim(c);
  return c;
}

std::uint32_t from_poly(const Poly &c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    code = code * p + c[i];
  return code;
}

} // namespace

bool is_irreducible(const std::vector<std::uint32_t> &f, std::uint32_t p) {
  if (f.size() < 2 || f.back() != 1)
    return false;
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  const Poly x = poly_mod({0, 1}, f, p);
  if (x_pow_p_pow(m, f, p) != x)
    return false;
  const Factorization mf = factorize(m);
  for (const auto &pp : mf.factors()) {
    const unsigned r = static_cast<unsigned>(pp.prime);
    const Poly h = poly_sub(x_pow_p_pow(m / r, f, p), x, p);
    if (poly_gcd(f, h, p).size() != 1)
      return false;
  }
  return true;
}

ExtField ExtField::build(std::uint32_t p, unsigned m,
                         const FieldOverrides &overrides, std::uint64_t cap) {
  if (!is_prime(p))
    fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (m < 1)
    fail(ErrorKind::InvalidArgument, "field degree must be at least 1");
  std::uint64_t size = 1;
  for (unsigned k = 0; k < m; ++k) {
    size *= p;
    if (size > cap)
      fail(ErrorKind::CapExceeded, std::to_string(p) + "^" + std::to_string(m) +
                                       " exceeds the field table cap " +
                                       std::to_string(cap));
  }

  ExtField F;
  F.p_ = p;
  F.m_ = m;
  F.size_ = static_cast<std::uint32_t>(size);

  if (overrides.modulus) {
    F.modulus_ = *overrides.modulus;
    if (F.modulus_.size() != m + 1 || !is_irreducible(F.modulus_, p))
      fail(ErrorKind::InvalidModulus, "modulus override is not a monic "
                                      "irreducible polynomial of degree " +
                                          std::to_string(m));
  } else {
    for (std::uint32_t low = 1; low < F.size_; ++low) {
      Poly f(m + 1, 0);
      std::uint32_t x = low;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = x % p;
        x /= p;
      }
      f[m] = 1;
      if (f[0] != 0 && is_irreducible(f, p)) {
        F.modulus_ = std::move(f);
        break;
      }
    }
  }

  const std::uint32_t order = F.size_ - 1;
  const auto order_primes = factorize(order);
  auto has_full_order = [&](std::uint32_t code) {
    const Poly a = to_poly(code, p, m);
    if (a.empty())
      return false;
    if (poly_powmod(a, order, F.modulus_, p) != Poly{1})
      return false;
    for (const auto &pp : order_primes.factors())
      if (poly_powmod(a, order / pp.prime, F.modulus_, p) == Poly{1})
        return false;
    return true;
  };

  if (overrides.alpha) {
    if (overrides.alpha->code() >= F.size_ ||
        !has_full_order(overrides.alpha->code()))
      fail(ErrorKind::InvalidArgument, "alpha override is not primitive");
    F.alpha_ = *overrides.alpha;
  } else {
    for (std::uint32_t code = 1; code < F.size_; ++code)
      if (has_full_order(code)) {
        F.alpha_ = FieldElement(code);
        break;
      }
  }

  F.log_.assign(F.size_, 0);
  F.antilog_.assign(order, FieldElement(0));
  const Poly alpha_poly = to_poly(F.alpha_.code(), p, m);
  Poly cur{1};
  for (std::uint32_t k = 0; k < order; ++k) {
    const std::uint32_t code = from_poly(cur, p);
    F.antilog_[k] = FieldElement(code);
    F.log_[code] = k;
    cur = poly_mulmod(cur, alpha_poly, F.modulus_, p);
  }

  F.trace_.assign(F.size_, 0);
  for (std::uint32_t code = 1; code < F.size_; ++code) {
    FieldElement t = F.zero();
    FieldElement y(code);
    for (unsigned k = 0; k < m; ++k) {
      t = F.add(t, y);
      y = F.frobenius(y);
    }
    if (t.code() >= p)
      fail(ErrorKind::VerificationFailure, "trace left the prime field");
    F.trace_[code] = t.code();
  }
  return F;
}

FieldElement ExtField::add(FieldElement a, FieldElement b) const {
  if (p_ == 2)
    return FieldElement(a.code() ^ b.code());
  std::uint32_t x = a.code(), y = b.code(), r = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return FieldElement(r);
}

FieldElement ExtField::neg(FieldElement a) const {
  if (p_ == 2)
    return a;
  std::uint32_t x = a.code(), r = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return FieldElement(r);
}

FieldElement ExtField::sub(FieldElement a, FieldElement b) const {
  return add(a, neg(b));
}

FieldElement ExtField::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero())
    return zero();
  return antilog_[(std::uint64_t{log_[a.code()]} + log_[b.code()]) % order()];
}

FieldElement ExtField::scale(FieldElement a, std::uint32_t c) const {
  return mul(a, FieldElement(c % p_));
}

FieldElement ExtField::inv(FieldElement a) const {
  if (a.is_zero())
    fail(ErrorKind::InvalidArgument, "zero has no inverse");
  return antilog_[(order() - log_[a.code()]) % order()];
}

FieldElement ExtField::pow(FieldElement a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e < 0)
      fail(ErrorKind::InvalidArgument, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t ord = order();
  std::int64_t k = (static_cast<std::int64_t>(log_[a.code()]) * (e % ord)) % ord;
  if (k < 0)
    k += ord;
  return antilog_[static_cast<std::size_t>(k)];
}

std::uint32_t ExtField::log(FieldElement a) const {
  if (a.is_zero() || a.code() >= size_)
    fail(ErrorKind::InvalidArgument, "log of zero");
  return log_[a.code()];
}

FieldElement ExtField::frobenius(FieldElement a, unsigned times) const {
  if (a.is_zero())
    return a;
  std::uint64_t k = log_[a.code()];
  for (unsigned t = 0; t < times; ++t)
    k = k * p_ % order();
  return antilog_[k];
}

std::uint64_t ExtField::multiplicative_order(FieldElement a) const {
  if (a.is_zero())
    fail(ErrorKind::InvalidArgument, "zero has no multiplicative order");
  const std::uint64_t k = log_[a.code()];
  return order() / gcd(k, order());
}

std::vector<FieldElement> ExtField::primitive_elements() const {
  std::vector<FieldElement> out;
  for (std::uint32_t code = 1; code < size_; ++code)
    if (multiplicative_order(FieldElement(code)) == order())
      out.emplace_back(code);
  return out;
}

FieldElement ExtField::subfield_generator(unsigned d) const {
  if (d == 0 || m_ % d != 0)
    fail(ErrorKind::InvalidArgument,
         std::to_string(d) + " does not divide " + std::to_string(m_));
  std::uint64_t sub_order = 1;
  for (unsigned k = 0; k < d; ++k)
    sub_order *= p_;
  return antilog(order() / (sub_order - 1));
}

std::vector<std::uint32_t> ExtField::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> c(m_, 0);
  std::uint32_t x = a.code();
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

FieldElement ExtField::from_coefficients(std::span<const std::uint32_t> c) const {
  if (c.size() != m_)
    fail(ErrorKind::InvalidArgument, "coefficient list has wrong length");
  std::uint32_t code = 0;
  for (std::size_t i = m_; i-- > 0;) {
    if (c[i] >= p_)
      fail(ErrorKind::InvalidArgument, "coefficient not reduced mod p");
    code = code * p_ + c[i];
  }
  return FieldElement(code);
}

} // namespace qcenum
