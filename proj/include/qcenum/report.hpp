#pragma once

// Serialization of index tables: bracket rows "[i,M_i]", CSV and JSON.
// Counts are always exact decimal strings.

#include "qcenum/bigcount.hpp"
#include "qcenum/enumeration.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcenum {

enum class OutputFormat { Human, Csv, Json };

OutputFormat parse_format(const std::string &tag);

struct OutputRow {
  std::uint64_t index = 0;
  BigCount count;
  std::optional<std::string> factored;
};

struct OutputRecord {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::uint64_t N = 0;
  std::vector<std::uint64_t> zeros;
  std::vector<OutputRow> rows; // ascending index
  BigCount index_N_count = 0;
  EnumerationOptions options;
  std::string engine;
};

OutputRecord make_record(const IndexTable &table, const std::string &engine);
OutputRecord make_record(const CodeSpec &spec,
                         const std::map<std::uint64_t, BigCount> &rows,
                         const std::string &engine);

/// Fills OutputRow::factored where trial division by primes below `bound`
/// leaves a cofactor of 1 or below bound^2.
void add_factorizations(OutputRecord &rec, std::uint64_t bound = 1000000);

/// "2^3*3*5^2*..." or nullopt when the cofactor stays composite-or-unknown.
std::optional<std::string> factor_display(const BigCount &x,
                                          std::uint64_t bound = 1000000);

/// "[1,2], [3,18], [7,84]"
std::string bracket_rows(const std::map<std::uint64_t, BigCount> &rows);
std::string bracket_rows(const std::vector<OutputRow> &rows);

nlohmann::json to_json(const OutputRecord &rec);
std::string to_csv(const OutputRecord &rec);
std::string to_human(const OutputRecord &rec);

std::string render(const OutputRecord &rec, OutputFormat format);

/// "[1, 3]"
std::string list_string(const std::vector<std::uint64_t> &xs);

} // namespace qcenum
