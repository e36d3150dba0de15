#include "qcenum/counting.hpp"
#include "qcenum/error.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace qcenum;

namespace {

// Subspaces of F_2^n as addition-closed subsets of bitmask vectors.
std::vector<std::uint64_t> brute_subspaces_by_dim_binary(unsigned n) {
  const unsigned size = 1u << n;
  std::vector<std::uint64_t> by_dim(n + 1, 0);
  for (std::uint64_t set = 1; set < (std::uint64_t{1} << size); set += 2) {
    bool closed = true;
    unsigned count = 0;
    for (unsigned a = 0; a < size && closed; ++a) {
      if (!(set >> a & 1))
        continue;
      ++count;
      for (unsigned b = 0; b < size; ++b)
        if ((set >> b & 1) && !(set >> (a ^ b) & 1)) {
          closed = false;
          break;
        }
    }
    if (closed)
      ++by_dim[std::countr_zero(count)];
  }
  return by_dim;
}

// Subspaces of F_p^2: the zero space, p + 1 lines and the plane.
BigCount ref_binomial_plane(unsigned k, std::uint64_t p) {
  return k == 1 ? BigCount(p + 1) : BigCount(1);
}

} // namespace

TEST(Counting, GaussianBinomialExamples) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(7, 0, 5), 1);
  EXPECT_EQ(gaussian_binomial(2, 1, 8), 9);
  EXPECT_THROW(gaussian_binomial(2, 3, 2), Error);
  EXPECT_THROW(gaussian_binomial(2, 1, 1), Error);
}

TEST(Counting, GaussianBinomialMatchesBruteForce) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto brute = brute_subspaces_by_dim_binary(n);
    for (unsigned k = 0; k <= n; ++k)
      EXPECT_EQ(gaussian_binomial(n, k, 2), brute[k]) << n << ' ' << k;
  }
  for (std::uint64_t p : {3, 5, 7})
    for (unsigned k = 0; k <= 2; ++k)
      EXPECT_EQ(gaussian_binomial(2, k, p), ref_binomial_plane(k, p));
}

TEST(Counting, GaussianBinomialSymmetryAndRecurrence) {
  for (unsigned q : {2, 3, 4, 5, 8, 9}) {
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        ASSERT_EQ(gaussian_binomial(n, k, q), gaussian_binomial(n, n - k, q));
        if (n >= 1 && k >= 1 && k <= n - 1)
          ASSERT_EQ(gaussian_binomial(n, k, q),
                    gaussian_binomial(n - 1, k - 1, q) +
                        big_pow(q, k) * gaussian_binomial(n - 1, k, q));
      }
  }
}

TEST(Counting, SubspaceTotal) {
  EXPECT_EQ(subspace_total(3, 4), 43);
  EXPECT_EQ(subspace_total(2, 8), 10);
  EXPECT_EQ(subspace_total(6, 2), 2824);
  EXPECT_EQ(subspace_total(4, 2), 66);
}

TEST(Counting, MaximalCountExamples) {
  const auto t6 = maximal_counts(factorize(6), 2);
  EXPECT_EQ(t6.at(1), 2772);
  EXPECT_EQ(t6.at(2), 42);
  EXPECT_EQ(t6.at(3), 9);
  EXPECT_EQ(t6.at(6), 1);
  const auto t4 = maximal_counts(factorize(4), 2);
  EXPECT_EQ(t4.at(1), 60);
  EXPECT_EQ(t4.at(2), 5);
  EXPECT_EQ(t4.at(4), 1);
  const auto t32 = maximal_counts(factorize(2), 3);
  EXPECT_EQ(t32.at(1), 4);
  EXPECT_EQ(t32.at(2), 1);
}

TEST(Counting, PartitionIdentity) {
  for (unsigned q : {2, 3, 5})
    for (unsigned n = 1; n <= 24; ++n) {
      const auto t = maximal_counts(factorize(n), q);
      ASSERT_EQ(t.at(n), 1);
      ASSERT_EQ(t.sum(), subspace_total(n, q)) << q << ' ' << n;
    }
}

TEST(Counting, MoebiusMatchesInclusionExclusion) {
  for (unsigned q : {2, 3})
    for (unsigned n = 1; n <= 60; ++n) {
      const auto f = factorize(n);
      if (f.size() > 3)
        continue;
      ASSERT_EQ(maximal_counts(f, q), maximal_counts_inclusion_exclusion(f, q))
          << q << ' ' << n;
    }
}

TEST(Counting, LargeValuesExact) {
  EXPECT_EQ(gaussian_binomial(6, 1, 4), 1365);
  EXPECT_EQ(to_decimal(subspace_total(20, 2)),
            to_decimal(maximal_counts(factorize(20), 2).sum()));
}
