#include "qcenum/enumeration.hpp"

#include "qcenum/counting.hpp"
#include "qcenum/index_calc.hpp"

#include <utility>
#include <vector>

namespace qcenum {

BigCount IndexTable::entries_sum() const {
  BigCount s = 0;
  for (const auto &[index, count] : entries)
    s += count;
  return s;
}

IndexTable multiplicity_table(const CodeSpec &spec,
                              const EnumerationOptions &opts) {
  const IndexContributionMatrix m = contribution_matrix(spec);
  const MaximalCountTable maximal =
      maximal_counts(factorize(spec.n), BigCount(spec.q));

  // Keys are divisors of N, so the map stays small regardless of s.
  std::map<std::uint64_t, BigCount> fold{{1, 1}};
  for (std::size_t j = 0; j < spec.s(); ++j) {
    std::vector<std::pair<std::uint64_t, const BigCount *>> options;
    static const BigCount one = 1;
    options.emplace_back(1, &one); // V_j = 0
    for (std::size_t r = 0; r < m.divisors.size(); ++r)
      options.emplace_back(m.entries[r][j], &maximal.at(m.divisors[r]));

    std::map<std::uint64_t, BigCount> next;
    for (const auto &[index, count] : fold)
      for (const auto &[contribution, weight] : options)
        next[lcm(index, contribution)] += count * *weight;
    fold = std::move(next);
  }

  IndexTable table;
  table.spec = spec;
  table.options = opts;
  // The all-zero tuple and the all-F_{q^n} tuple both land on index 1.
  if (opts.exclude_zero_code)
    fold[1] -= 1;
  if (opts.exclude_full_code)
    fold[1] -= 1;
  if (auto it = fold.find(spec.N); it != fold.end()) {
    if (opts.report_index_N)
      table.index_N_count = it->second;
    fold.erase(it);
  }
  table.entries = std::move(fold);
  return table;
}

BigCount grand_total(const CodeSpec &spec) {
  return big_pow(subspace_total(spec.n, BigCount(spec.q)) + 1,
                 static_cast<unsigned>(spec.s()));
}

} // namespace qcenum
