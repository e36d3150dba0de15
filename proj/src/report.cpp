#include "qcenum/report.hpp"

#include "qcenum/error.hpp"

#include <sstream>

namespace qcenum {

OutputFormat parse_format(const std::string &tag) {
  if (tag == "human" || tag == "table")
    return OutputFormat::Human;
  if (tag == "csv")
    return OutputFormat::Csv;
  if (tag == "json")
    return OutputFormat::Json;
  fail(ErrorKind::InvalidArgument, "unknown format '" + tag + "'");
}

OutputRecord make_record(const CodeSpec &spec,
                         const std::map<std::uint64_t, BigCount> &rows,
                         const std::string &engine) {
  OutputRecord rec;
  rec.q = spec.q;
  rec.n = spec.n;
  rec.N = spec.N;
  rec.zeros = spec.zeros;
  for (const auto &[index, count] : rows)
    rec.rows.push_back({index, count, std::nullopt});
  rec.engine = engine;
  return rec;
}

OutputRecord make_record(const IndexTable &table, const std::string &engine) {
  OutputRecord rec = make_record(table.spec, table.entries, engine);
  rec.index_N_count = table.index_N_count;
  rec.options = table.options;
  return rec;
}

std::optional<std::string> factor_display(const BigCount &x, std::uint64_t bound) {
  if (x < 1)
    return std::nullopt;
  if (x == 1)
    return std::string("1");
  BigCount rest = x;
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string &factor, unsigned e) {
    if (!first)
      out << '*';
    first = false;
    out << factor;
    if (e > 1)
      out << '^' << e;
  };
  for (std::uint64_t p = 2; p < bound && BigCount(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e)
      emit(std::to_string(p), e);
  }
  if (rest > 1) {
    // A cofactor with no factor below bound is prime only if below bound^2.
    if (rest >= BigCount(bound) * bound)
      return std::nullopt;
    emit(rest.str(), 1);
  }
  return out.str();
}

void add_factorizations(OutputRecord &rec, std::uint64_t bound) {
  for (auto &row : rec.rows)
    row.factored = factor_display(row.count, bound);
}

std::string bracket_rows(const std::map<std::uint64_t, BigCount> &rows) {
  std::ostringstream out;
  bool first = true;
  for (const auto &[index, count] : rows) {
    out << (first ? "" : ", ") << '[' << index << ',' << count << ']';
    first = false;
  }
  return out.str();
}

std::string bracket_rows(const std::vector<OutputRow> &rows) {
  std::map<std::uint64_t, BigCount> m;
  for (const auto &r : rows)
    m[r.index] = r.count;
  return bracket_rows(m);
}

std::string list_string(const std::vector<std::uint64_t> &xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < xs.size(); ++k)
    out << (k ? ", " : "") << xs[k];
  out << ']';
  return out.str();
}

nlohmann::json to_json(const OutputRecord &rec) {
  nlohmann::json j;
  j["q"] = rec.q;
  j["n"] = rec.n;
  j["N"] = rec.N;
  j["zeros"] = rec.zeros;
  auto table = nlohmann::json::array();
  for (const auto &row : rec.rows) {
    nlohmann::json r{{"index", row.index}, {"count", row.count.str()}};
    if (row.factored)
      r["factored"] = *row.factored;
    table.push_back(std::move(r));
  }
  j["table"] = std::move(table);
  j["index_N_count"] = rec.index_N_count.str();
  j["options"] = {{"exclude_zero_code", rec.options.exclude_zero_code},
                  {"exclude_full_code", rec.options.exclude_full_code},
                  {"report_index_N", rec.options.report_index_N}};
  j["engine"] = rec.engine;
  return j;
}

std::string to_csv(const OutputRecord &rec) {
  bool factored = false;
  for (const auto &row : rec.rows)
    factored = factored || row.factored.has_value();
  std::ostringstream out;
  out << (factored ? "index,count,factored\n" : "index,count\n");
  for (const auto &row : rec.rows) {
    out << row.index << ',' << row.count;
    if (factored)
      out << ',' << row.factored.value_or("");
    out << '\n';
  }
  return out.str();
}

std::string to_human(const OutputRecord &rec) {
  std::ostringstream out;
  out << "q = " << rec.q << ", n = " << rec.n << ", N = " << rec.N
      << ", zeros = " << list_string(rec.zeros) << " (" << rec.engine << ")\n";
  out << bracket_rows(rec.rows) << '\n';
  for (const auto &row : rec.rows)
    if (row.factored)
      out << "  " << row.index << ": " << *row.factored << '\n';
  if (rec.options.report_index_N)
    out << "index N = " << rec.N << " (not quasi-cyclic): " << rec.index_N_count
        << " subspace tuples\n";
  return out.str();
}

std::string render(const OutputRecord &rec, OutputFormat format) {
  switch (format) {
  case OutputFormat::Human:
    return to_human(rec);
  case OutputFormat::Csv:
    return to_csv(rec);
  case OutputFormat::Json:
    return to_json(rec).dump() + "\n";
  }
  return {};
}

} // namespace qcenum
