#include "qcenum/error.hpp"
#include "qcenum/index_calc.hpp"

#include "spec_samples.hpp"

#include <gtest/gtest.h>

using namespace qcenum;

TEST(IndexCalc, LValue) {
  EXPECT_EQ(L_value(2, 4, 2), 5u);
  EXPECT_EQ(L_value(3, 7, 7), 1u);
  EXPECT_EQ(L_value(2, 6, 1), 63u);
  EXPECT_THROW(L_value(2, 6, 4), Error);
}

TEST(IndexCalc, Ell) {
  EXPECT_EQ(ell(1, 85), 85u);
  EXPECT_EQ(ell(3, 63), 21u);
  EXPECT_EQ(ell(3, 9), 3u);
  EXPECT_EQ(ell(6, 4), 2u);
}

TEST(IndexCalc, ContributionMatrix) {
  const auto m = contribution_matrix(validate_spec(2, 6, {1, 3}));
  EXPECT_EQ(m.divisors, (std::vector<std::uint64_t>{1, 2, 3, 6}));
  std::vector<std::uint64_t> col3;
  for (const auto &row : m.entries)
    col3.push_back(row[1]);
  EXPECT_EQ(col3, (std::vector<std::uint64_t>{21, 7, 3, 1}));
  EXPECT_EQ(m.entries.back(), (std::vector<std::uint64_t>{1, 1}));

  const auto m4 = contribution_matrix(validate_spec(2, 4, {1}));
  EXPECT_EQ(m4.L, (std::vector<std::uint64_t>{15, 5, 1}));
  for (std::size_t r = 0; r < m4.L.size(); ++r)
    EXPECT_EQ(m4.entries[r][0], m4.L[r]);
}

TEST(IndexCalc, IndexSetExamples) {
  EXPECT_EQ(index_set(validate_spec(2, 4, {1})).indices, (std::set<std::uint64_t>{1, 5}));
  EXPECT_EQ(index_set(validate_spec(2, 6, {1, 3})).indices,
            (std::set<std::uint64_t>{1, 3, 7, 9, 21}));
  EXPECT_EQ(index_set(validate_spec(3, 4, {1, 2})).indices,
            (std::set<std::uint64_t>{1, 5, 10, 20, 40}));
  EXPECT_TRUE(index_set(validate_spec(2, 4, {1})).excluded_N);
  EXPECT_FALSE(index_set(validate_spec(3, 2, {1})).excluded_N);
}

TEST(IndexCalc, FamilyIndexSets) {
  // n = u v with zeros {1, 3} and {1, 2}, and n = u^(a-1) with zeros {1, 3}.
  const auto L = [](std::uint64_t q, unsigned n, unsigned d) { return L_value(q, n, d); };
  EXPECT_EQ(index_set(validate_spec(2, 15, {1, 3})).indices,
            (std::set<std::uint64_t>{1, L(2, 15, 3), L(2, 15, 5)}));
  EXPECT_EQ(index_set(validate_spec(2, 10, {1, 3})).indices,
            (std::set<std::uint64_t>{1, L(2, 10, 2), L(2, 10, 5), L(2, 10, 5) / 3}));
  EXPECT_EQ(index_set(validate_spec(3, 6, {1, 2})).indices,
            (std::set<std::uint64_t>{1, L(3, 6, 1), L(3, 6, 1) / 2, L(3, 6, 2),
                                     L(3, 6, 3), L(3, 6, 3) / 2}));
  EXPECT_EQ(index_set(validate_spec(2, 9, {1, 3})).indices,
            (std::set<std::uint64_t>{1, L(2, 9, 3)}));
  EXPECT_EQ(index_set(validate_spec(2, 8, {1, 3})).indices,
            (std::set<std::uint64_t>{1, L(2, 8, 2), L(2, 8, 4)}));
}

TEST(IndexCalc, EntriesDivideN) {
  for (std::uint64_t q : {2, 3})
    for (unsigned n = 2; checked_pow(q, n) - 1 <= 14348906 && n <= 15; ++n) {
      const std::uint64_t N = checked_pow(q, n) - 1;
      const auto ds = divisors(n);
      const std::uint64_t step = N > 100000 ? 997 : 1;
      for (auto d : ds) {
        const auto Ld = L_value(q, n, static_cast<unsigned>(d));
        ASSERT_EQ(N % Ld, 0u);
        for (std::uint64_t i = 1; i < N; i += step)
          ASSERT_EQ(N % ell(i, Ld), 0u);
      }
    }
}

TEST(IndexCalc, CosetInvariance) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 16, 64})
    for (unsigned n = 2; checked_pow(q, n) <= 4096; ++n) {
      const std::uint64_t N = checked_pow(q, n) - 1;
      for (std::uint64_t i = 1; i < N; ++i) {
        const auto c = cyclotomic_coset(i, q, N);
        if (c.size() != n)
          continue;
        for (auto d : divisors(n)) {
          const auto Ld = L_value(q, n, static_cast<unsigned>(d));
          for (auto j : c)
            ASSERT_EQ(ell(j, Ld), ell(i, Ld));
        }
      }
    }
}

TEST(IndexCalc, MonotoneAlongDivisors) {
  for (std::uint64_t q : {2, 3})
    for (unsigned n = 2; n <= 20; ++n)
      for (auto d : divisors(n))
        for (auto e : divisors(n))
          if (e % d == 0)
            ASSERT_EQ(ell(1, L_value(q, n, d)) % ell(1, L_value(q, n, e)), 0u);
}

TEST(IndexCalc, LiteralMatchesFold) {
  for (const auto &spec : sample_specs({2, 3, 4}, 12, 3)) {
    const auto fold = index_set(spec);
    const auto lit = index_set_literal(spec);
    ASSERT_EQ(fold.indices, lit.indices) << spec.q << ' ' << spec.n;
    ASSERT_EQ(fold.excluded_N, lit.excluded_N);
    ASSERT_TRUE(fold.indices.count(1));
    ASSERT_FALSE(fold.indices.count(spec.N));
  }
}
