#include "qcenum/index_calc.hpp"

#include "qcenum/enumeration.hpp"
#include "qcenum/error.hpp"

namespace qcenum {

std::uint64_t L_value(std::uint64_t q, unsigned n, unsigned d) {
  if (d == 0 || n % d != 0)
    fail(ErrorKind::InvalidArgument,
         std::to_string(d) + " does not divide " + std::to_string(n));
  return (checked_pow(q, n) - 1) / (checked_pow(q, d) - 1);
}

std::uint64_t ell(std::uint64_t i, std::uint64_t L) {
  if (i == 0 || L == 0)
    fail(ErrorKind::InvalidArgument, "ell requires i >= 1 and L >= 1");
  return L / gcd(i, L);
}

IndexContributionMatrix contribution_matrix(const CodeSpec &spec) {
  IndexContributionMatrix m;
  m.spec = spec;
  m.divisors = divisors(spec.n);
  for (std::uint64_t d : m.divisors) {
    const std::uint64_t L = L_value(spec.q, spec.n, static_cast<unsigned>(d));
    m.L.push_back(L);
    std::vector<std::uint64_t> row;
    for (std::uint64_t i : spec.zeros)
      row.push_back(ell(i, L));
    m.entries.push_back(std::move(row));
  }
  return m;
}

IndexSet index_set(const CodeSpec &spec) {
  EnumerationOptions all;
  all.exclude_zero_code = false;
  all.exclude_full_code = false;
  all.report_index_N = true;
  const IndexTable table = multiplicity_table(spec, all);
  IndexSet out;
  for (const auto &[index, count] : table.entries)
    if (count > 0)
      out.indices.insert(index);
  out.excluded_N = table.index_N_count > 0;
  return out;
}

IndexSet index_set_literal(const CodeSpec &spec) {
  const IndexContributionMatrix m = contribution_matrix(spec);
  const std::size_t s = spec.s();
  const std::size_t rows = m.divisors.size();
  IndexSet out;
  out.indices.insert(1);
  // Each zero either sits out (digit 0) or picks a field row (digit r + 1).
  std::vector<std::size_t> digit(s, 0);
  while (true) {
    std::size_t k = 0;
    while (k < s && digit[k] == rows) {
      digit[k] = 0;
      ++k;
    }
    if (k == s)
      break;
    ++digit[k];

    std::uint64_t value = 1;
    for (std::size_t j = 0; j < s; ++j)
      if (digit[j] > 0)
        value = lcm(value, m.entries[digit[j] - 1][j]);
    if (value == spec.N)
      out.excluded_N = true;
    else
      out.indices.insert(value);
  }
  return out;
}

} // namespace qcenum
