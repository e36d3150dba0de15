#include "qcenum/closed_form.hpp"

#include "qcenum/counting.hpp"
#include "qcenum/enumeration.hpp"
#include "qcenum/error.hpp"
#include "qcenum/index_calc.hpp"

#include <set>

namespace qcenum {

namespace {

constexpr std::string_view kSimplexTag = "simplex";
constexpr std::string_view kPrimePowerTag = "bch2-binary-primepower";
constexpr std::string_view kTwoPrimesTag = "bch2-binary-twoprimes";
constexpr std::string_view kParyTag = "bch3-pary-twoprimes";

void require_prime(std::uint64_t x, const char *what) {
  if (!is_prime(x))
    fail(ErrorKind::InvalidArgument,
         std::string(what) + " = " + std::to_string(x) + " is not prime");
}

void normalize(ClosedFormTable &t) {
  t.normalized = t.literal;
  t.normalized[1] -= 1;
}

// N(dim, field_size) with the convention that a negative dimension counts
// no subspaces.
BigCount subspaces_or_zero(long dim_exp, std::uint64_t base, long field_exp,
                           std::uint64_t q) {
  if (dim_exp < 0)
    return 0;
  const std::uint64_t dim = checked_pow(base, static_cast<unsigned>(dim_exp));
  const std::uint64_t field_degree =
      checked_pow(base, static_cast<unsigned>(field_exp));
  return subspace_total(static_cast<unsigned>(dim),
                        big_pow(BigCount(q), static_cast<unsigned>(field_degree)));
}

BigCount N_of(std::uint64_t dim, std::uint64_t q, std::uint64_t field_degree) {
  return subspace_total(static_cast<unsigned>(dim),
                        big_pow(BigCount(q), static_cast<unsigned>(field_degree)));
}

} // namespace

std::string_view family_name(Family f) {
  switch (f) {
  case Family::Simplex:
    return kSimplexTag;
  case Family::Bch2BinaryPrimePower:
    return kPrimePowerTag;
  case Family::Bch2BinaryTwoPrimes:
    return kTwoPrimesTag;
  case Family::Bch3ParyTwoPrimes:
    return kParyTag;
  }
  return "unknown";
}

Family parse_family(std::string_view tag) {
  if (tag == kSimplexTag)
    return Family::Simplex;
  if (tag == kPrimePowerTag)
    return Family::Bch2BinaryPrimePower;
  if (tag == kTwoPrimesTag)
    return Family::Bch2BinaryTwoPrimes;
  if (tag == kParyTag)
    return Family::Bch3ParyTwoPrimes;
  fail(ErrorKind::InvalidArgument, "unknown family '" + std::string(tag) + "'");
}

ClosedFormTable simplex_counts(std::uint64_t q, const Factorization &n_fact) {
  const std::uint64_t n = n_fact.value();
  ClosedFormTable t;
  t.family.family = Family::Simplex;
  t.family.q = q;
  t.family.n = static_cast<unsigned>(n);
  t.spec = validate_spec(q, static_cast<unsigned>(n), {1});

  const MaximalCountTable counts =
      maximal_counts_inclusion_exclusion(n_fact, BigCount(q));
  for (const auto &[d, count] : counts.by_divisor) {
    const std::uint64_t L = L_value(q, t.spec.n, static_cast<unsigned>(d));
    if (L == t.spec.N)
      continue; // only d = 1 with q = 2
    t.literal[L] = count;
  }
  normalize(t);
  return t;
}

ClosedFormTable bch2_binary_primepower(std::uint64_t u, unsigned a) {
  require_prime(u, "u");
  if (a < 2)
    fail(ErrorKind::InvalidArgument, "a must be at least 2");
  if (u == 2 && a == 2)
    fail(ErrorKind::InvalidArgument, "(u, a) = (2, 2) is excluded");

  ClosedFormTable t;
  t.family.family = Family::Bch2BinaryPrimePower;
  t.family.u = u;
  t.family.a = a;
  const unsigned n = static_cast<unsigned>(checked_pow(u, a - 1));
  t.spec = validate_spec(2, n, {1, 3});

  const long A_ = static_cast<long>(a);
  // N(u^x, 2^(u^y)), zero for negative x.
  auto NN = [&](long x, long y) { return subspaces_or_zero(x, u, y, 2); };
  auto A = [&](long j) { return NN(A_ - j - 1, j) - NN(A_ - j - 2, j + 1); };
  // L_j = (2^n - 1) / (2^(u^(j-1)) - 1)
  auto L = [&](long j) {
    return L_value(2, n, static_cast<unsigned>(checked_pow(u, j - 1)));
  };

  t.literal[1] = 3;
  if (a == 2) {
    normalize(t);
    return t;
  }
  if (u != 2) {
    t.literal[L(A_ - 1)] = 3 * A(A_ - 2) + A(A_ - 2) * NN(1, A_ - 2);
    for (long j = 2; j <= A_ - 2; ++j)
      t.literal[L(j)] =
          2 * A(j - 1) + A(j - 1) * (NN(A_ - j, j - 1) + NN(A_ - j - 1, j));
  } else if (a == 3) {
    t.literal[L(2)] = 3 * A(1) + 2 * A(0) + A(1) * NN(2, 0);
  } else {
    t.literal[L(A_ - 1)] = 3 * A(A_ - 2) + A(A_ - 2) * NN(1, A_ - 2);
    for (long j = 3; j <= A_ - 2; ++j)
      t.literal[L(j)] =
          2 * A(j - 1) + A(j - 1) * (NN(A_ - j, j - 1) + NN(A_ - j - 1, j));
    t.literal[L(2)] = 2 * A(1) + A(0) + A(1) * NN(A_ - 1, 0) +
                      (A(0) + A(1)) * NN(A_ - 3, 2);
  }
  normalize(t);
  return t;
}

ClosedFormTable bch2_binary_twoprimes(std::uint64_t u, std::uint64_t v) {
  require_prime(u, "u");
  require_prime(v, "v");
  if (u == v)
    fail(ErrorKind::InvalidArgument, "u and v must be distinct");
  if (v == 2)
    std::swap(u, v);

  ClosedFormTable t;
  t.family.family = Family::Bch2BinaryTwoPrimes;
  t.family.u = u;
  t.family.v = v;
  const unsigned n = static_cast<unsigned>(u * v);
  t.spec = validate_spec(2, n, {1, 3});

  const std::uint64_t L2 = L_value(2, n, static_cast<unsigned>(u));
  const std::uint64_t L3 = L_value(2, n, static_cast<unsigned>(v));
  const BigCount Nv = N_of(v, 2, u);  // N(v, 2^u)
  const BigCount Nu = N_of(u, 2, v);  // N(u, 2^v)
  const BigCount Nuv = N_of(n, 2, 1); // N(uv, 2)

  t.literal[1] = 3;
  if (u != 2) {
    t.literal[L2] = 2 * Nv + Nv * Nv - 3;
    t.literal[L3] = 2 * Nu + Nu * Nu - 3;
  } else if (v != 3) {
    t.literal[L2] = Nuv + Nv + Nuv * Nv - 2 * Nu - 1;
    t.literal[L3] = Nu * Nu - 1;
    t.literal[L3 / 3] = 2 * Nu - 2;
  } else {
    t.literal[21] = 124194;
    t.literal[9] = 99;
    t.literal[7] = 84;
    t.literal[3] = 18;
  }
  normalize(t);
  return t;
}

ClosedFormTable bch3_pary_twoprimes(std::uint64_t p, std::uint64_t u,
                                    std::uint64_t v) {
  require_prime(p, "p");
  require_prime(u, "u");
  require_prime(v, "v");
  if (p == 2)
    fail(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (u == v)
    fail(ErrorKind::InvalidArgument, "u and v must be distinct");
  if (v == 2)
    std::swap(u, v);

  ClosedFormTable t;
  t.family.family = Family::Bch3ParyTwoPrimes;
  t.family.p = p;
  t.family.u = u;
  t.family.v = v;
  const unsigned n = static_cast<unsigned>(u * v);
  t.spec = validate_spec(p, n, {1, 2});

  const std::uint64_t L1 = L_value(p, n, 1);
  const std::uint64_t L2 = L_value(p, n, static_cast<unsigned>(u));
  const std::uint64_t L3 = L_value(p, n, static_cast<unsigned>(v));
  const BigCount Nv = N_of(v, p, u);  // N(v, p^u)
  const BigCount Nu = N_of(u, p, v);  // N(u, p^v)
  const BigCount Nuv = N_of(n, p, 1); // N(uv, p)
  const BigCount A = Nuv - Nu - Nv + 1;

  t.literal[1] = 3;
  t.literal[L2] = 2 * Nv + Nv * Nv - 3;
  if (u != 2) {
    t.literal[L1] = A + A * (Nuv + Nu + Nv) + 2 * (Nu * Nv - Nu - Nv + 1);
    t.literal[L3] = 2 * Nu + Nu * Nu - 3;
  } else {
    t.literal[L1] = A + A * Nuv + (Nu - 1) * (A + Nv - 1);
    t.literal[L1 / 2] = 2 * A + (Nv - 1) * (A + Nu - 1);
    t.literal[L3] = Nu * Nu - 1;
    t.literal[L3 / 2] = 2 * (Nu - 1);
  }
  normalize(t);
  return t;
}

ClosedFormTable evaluate(const FamilySpec &f) {
  switch (f.family) {
  case Family::Simplex:
    return simplex_counts(f.q, factorize(f.n));
  case Family::Bch2BinaryPrimePower:
    return bch2_binary_primepower(f.u, f.a);
  case Family::Bch2BinaryTwoPrimes:
    return bch2_binary_twoprimes(f.u, f.v);
  case Family::Bch3ParyTwoPrimes:
    return bch3_pary_twoprimes(f.p, f.u, f.v);
  }
  fail(ErrorKind::InvalidArgument, "unknown family");
}

DiscrepancyReport compare_with_generic(const ClosedFormTable &table) {
  const IndexTable generic = multiplicity_table(table.spec);
  std::set<std::uint64_t> keys;
  for (const auto &[k, v] : table.normalized)
    keys.insert(k);
  for (const auto &[k, v] : generic.entries)
    keys.insert(k);

  DiscrepancyReport report;
  for (std::uint64_t k : keys) {
    DiscrepancyRow row;
    row.index = k;
    if (auto it = table.normalized.find(k); it != table.normalized.end())
      row.closed_form = it->second;
    if (auto it = generic.entries.find(k); it != generic.entries.end())
      row.generic = it->second;
    row.match = row.closed_form.value_or(0) == row.generic.value_or(0);
    report.all_match = report.all_match && row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

} // namespace qcenum
