#include "qcenum/enumeration.hpp"
#include "qcenum/error.hpp"

#include "golden_tables.hpp"

#include <gtest/gtest.h>

using namespace qcenum;

namespace {

BigCount evaluate_entry(const std::string &text) {
  BigCount v = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('*', pos), text.size());
    const std::string factor = text.substr(pos, end - pos);
    const std::size_t caret = factor.find('^');
    const BigCount base = parse_decimal(factor.substr(0, caret));
    const unsigned e = caret == std::string::npos ? 1 : std::stoul(factor.substr(caret + 1));
    v *= big_pow(base, e);
    pos = end + 1;
  }
  return v;
}

const GoldenCorrection *correction(std::uint64_t q, unsigned n, std::uint64_t index) {
  for (const auto &c : golden_corrections())
    if (c.q == q && c.n == n && c.index == index)
      return &c;
  return nullptr;
}

std::string row_name(const GoldenRow &row) {
  std::string s = "q=" + std::to_string(row.q) + " n=" + std::to_string(row.n) + " zeros=";
  for (auto z : row.zeros)
    s += std::to_string(z) + ",";
  return s;
}

} // namespace

TEST(Golden, ReferenceRows) {
  std::size_t corrected = 0;
  for (const auto &row : golden_rows()) {
    const auto t = multiplicity_table(validate_spec(row.q, row.n, row.zeros));
    ASSERT_EQ(t.entries.size(), row.entries.size()) << row_name(row);
    for (const auto &e : row.entries) {
      ASSERT_TRUE(t.entries.count(e.index)) << row_name(row) << " index " << e.index;
      const BigCount printed = evaluate_entry(e.count);
      const auto *c = row.zeros.size() == 1 ? correction(row.q, row.n, e.index) : nullptr;
      if (c) {
        EXPECT_NE(printed, parse_decimal(c->count));
        EXPECT_EQ(t.entries.at(e.index), parse_decimal(c->count))
            << row_name(row) << " index " << e.index;
        ++corrected;
      } else {
        EXPECT_EQ(t.entries.at(e.index), printed) << row_name(row) << " index " << e.index;
      }
    }
  }
  EXPECT_EQ(corrected, golden_corrections().size());
}

TEST(Golden, SimplexRowsAccountForEverySubspace) {
  for (const auto &row : golden_rows()) {
    if (row.zeros.size() != 1)
      continue;
    const auto spec = validate_spec(row.q, row.n, row.zeros);
    const auto t = multiplicity_table(spec);
    EXPECT_EQ(t.entries_sum() + t.index_N_count + 2, grand_total(spec));
  }
}
