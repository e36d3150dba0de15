#pragma once

// Exact counts of F_q-subspaces of F_{q^n}, including the number of
// subspaces whose largest field of definition is a given F_{q^d}.

#include "qcenum/bigcount.hpp"
#include "qcenum/numth.hpp"

#include <cstdint>
#include <map>

namespace qcenum {

/// Number of k-dimensional subspaces of an n-dimensional space over a field
/// of size q. Memoized; safe to call concurrently.
BigCount gaussian_binomial(unsigned n, unsigned k, const BigCount &q);

/// Number of nonzero subspaces of F_q^n: sum of gaussian_binomial(n, k, q)
/// over 1 <= k <= n.
BigCount subspace_total(unsigned n, const BigCount &q);

/// Nonzero subspaces of F_{q^n} maximally defined over each F_{q^d}, d | n.
struct MaximalCountTable {
  BigCount q;
  unsigned n = 0;
  std::map<std::uint64_t, BigCount> by_divisor;

  const BigCount &at(std::uint64_t d) const;
  BigCount sum() const;

  bool operator==(const MaximalCountTable &) const = default;
};

/// Moebius inversion over the divisor lattice of n/d:
///   M(d) = sum_{m | n/d} mu(m) * subspace_total(n/(d m), q^(d m)).
MaximalCountTable maximal_counts(const Factorization &n_fact,
                                 const BigCount &q);

/// Same table computed by inclusion-exclusion over the primes that can
/// still be raised in the exponent vector of d.
MaximalCountTable maximal_counts_inclusion_exclusion(const Factorization &n_fact,
                                                     const BigCount &q);

} // namespace qcenum
