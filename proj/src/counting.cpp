#include "qcenum/counting.hpp"

#include "qcenum/error.hpp"

#include <bit>
#include <mutex>
#include <tuple>

namespace qcenum {

namespace {

struct GaussianMemo {
  std::mutex mu;
  std::map<std::tuple<unsigned, unsigned, BigCount>, BigCount> values;
};

GaussianMemo &memo() {
  static GaussianMemo m;
  return m;
}

BigCount gaussian_binomial_uncached(unsigned n, unsigned k,
                                    const BigCount &q) {
  // Partial products are themselves Gaussian binomials [n, j]_q, so each
  // division is exact.
  BigCount result = 1;
  BigCount q_pow_n_minus_i = big_pow(q, n);
  BigCount q_pow_i_plus_1 = q;
  for (unsigned i = 0; i < k; ++i) {
    result *= q_pow_n_minus_i - 1;
    result /= q_pow_i_plus_1 - 1;
    q_pow_n_minus_i /= q;
    q_pow_i_plus_1 *= q;
  }
  return result;
}

} // namespace

BigCount gaussian_binomial(unsigned n, unsigned k, const BigCount &q) {
  if (k > n)
    fail(ErrorKind::InvalidArgument, "gaussian_binomial requires k <= n");
  if (q < 2)
    fail(ErrorKind::InvalidArgument, "gaussian_binomial requires q >= 2");
  if (k == 0 || k == n)
    return 1;
  if (2 * k > n)
    k = n - k;
  auto key = std::make_tuple(n, k, q);
  auto &m = memo();
  {
    std::lock_guard lock(m.mu);
    if (auto it = m.values.find(key); it != m.values.end())
      return it->second;
  }
  BigCount value = gaussian_binomial_uncached(n, k, q);
  std::lock_guard lock(m.mu);
  m.values.emplace(std::move(key), value);
  return value;
}

BigCount subspace_total(unsigned n, const BigCount &q) {
  if (n < 1)
    fail(ErrorKind::InvalidArgument, "subspace_total requires n >= 1");
  BigCount total = 0;
  for (unsigned k = 1; k <= n; ++k)
    total += gaussian_binomial(n, k, q);
  return total;
}

const BigCount &MaximalCountTable::at(std::uint64_t d) const {
  auto it = by_divisor.find(d);
  if (it == by_divisor.end())
    fail(ErrorKind::InvalidArgument,
         std::to_string(d) + " is not a divisor of " + std::to_string(n));
  return it->second;
}

BigCount MaximalCountTable::sum() const {
  BigCount s = 0;
  for (const auto &[d, c] : by_divisor)
    s += c;
  return s;
}

MaximalCountTable maximal_counts(const Factorization &n_fact,
                                 const BigCount &q) {
  const std::uint64_t n = n_fact.value();
  MaximalCountTable table{q, static_cast<unsigned>(n), {}};
  for (std::uint64_t d : divisors(n_fact)) {
    const std::uint64_t rest = n / d;
    BigCount positive = 0;
    BigCount negative = 0;
    for (std::uint64_t m : divisors(rest)) {
      const int mu = moebius(m);
      if (mu == 0)
        continue;
      BigCount term = subspace_total(static_cast<unsigned>(rest / m),
                                     big_pow(q, static_cast<unsigned>(d * m)));
      (mu > 0 ? positive : negative) += term;
    }
    table.by_divisor.emplace(d, positive - negative);
  }
  return table;
}

MaximalCountTable maximal_counts_inclusion_exclusion(const Factorization &n_fact,
                                                     const BigCount &q) {
  const std::uint64_t n = n_fact.value();
  const auto &primes = n_fact.factors();
  const std::size_t t = primes.size();
  MaximalCountTable table{q, static_cast<unsigned>(n), {}};
  for (std::uint64_t d : divisors(n_fact)) {
    std::vector<unsigned> exps(t, 0);
    for (std::size_t j = 0; j < t; ++j)
      for (std::uint64_t x = d; x % primes[j].prime == 0; x /= primes[j].prime)
        ++exps[j];

    BigCount positive = 0;
    BigCount negative = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << t); ++subset) {
      std::uint64_t field_degree = d;
      bool vanishes = false;
      for (std::size_t j = 0; j < t; ++j) {
        if (!(subset >> j & 1))
          continue;
        // No subspace is defined over a field beyond F_{q^n}.
        if (exps[j] + 1 > primes[j].exponent) {
          vanishes = true;
          break;
        }
        field_degree *= primes[j].prime;
      }
      if (vanishes)
        continue;
      BigCount term =
          subspace_total(static_cast<unsigned>(n / field_degree),
                         big_pow(q, static_cast<unsigned>(field_degree)));
      (std::popcount(subset) % 2 ? negative : positive) += term;
    }
    table.by_divisor.emplace(d, positive - negative);
  }
  return table;
}

} // namespace qcenum
