#include "qcenum/cli.hpp"

#include "qcenum/closed_form.hpp"
#include "qcenum/counting.hpp"
#include "qcenum/enumeration.hpp"
#include "qcenum/error.hpp"
#include "qcenum/index_calc.hpp"
#include "qcenum/oracle.hpp"
#include "qcenum/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace qcenum {

namespace {

struct SpecArgs {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::vector<std::uint64_t> zeros;
};

void add_spec_options(CLI::App *cmd, SpecArgs &a, bool with_zeros = true) {
  cmd->add_option("--q", a.q, "base field size (prime power)")->required();
  cmd->add_option("--n", a.n, "extension degree")->required();
  if (with_zeros)
    cmd->add_option("--zeros", a.zeros, "basic dual zeros, comma separated")
        ->required()
        ->delimiter(',');
}

nlohmann::json rows_json(const std::map<std::uint64_t, BigCount> &rows) {
  auto a = nlohmann::json::array();
  for (const auto &[index, count] : rows)
    a.push_back({{"index", index}, {"count", count.str()}});
  return a;
}

int cmd_indices(const SpecArgs &a, OutputFormat format, std::ostream &out) {
  const CodeSpec spec = validate_spec(a.q, a.n, a.zeros);
  const IndexContributionMatrix m = contribution_matrix(spec);
  const IndexSet I = index_set(spec);
  const std::vector<std::uint64_t> indices(I.indices.begin(), I.indices.end());

  if (format == OutputFormat::Json) {
    nlohmann::json j{{"q", spec.q},           {"n", spec.n},
                     {"N", spec.N},           {"zeros", spec.zeros},
                     {"divisors", m.divisors}, {"L", m.L},
                     {"matrix", m.entries},   {"indices", indices},
                     {"excluded_N", I.excluded_N}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (format == OutputFormat::Csv) {
    out << "d,L";
    for (auto z : spec.zeros)
      out << ",i=" << z;
    out << '\n';
    for (std::size_t r = 0; r < m.divisors.size(); ++r) {
      out << m.divisors[r] << ',' << m.L[r];
      for (auto e : m.entries[r])
        out << ',' << e;
      out << '\n';
    }
    return kExitOk;
  }
  out << "q = " << spec.q << ", n = " << spec.n << ", N = " << spec.N
      << ", zeros = " << list_string(spec.zeros) << '\n';
  out << std::setw(6) << "d" << std::setw(22) << "L_d";
  for (auto z : spec.zeros)
    out << std::setw(22) << ("i=" + std::to_string(z));
  out << '\n';
  for (std::size_t r = 0; r < m.divisors.size(); ++r) {
    out << std::setw(6) << m.divisors[r] << std::setw(22) << m.L[r];
    for (auto e : m.entries[r])
      out << std::setw(22) << e;
    out << '\n';
  }
  out << "I = {";
  for (std::size_t k = 0; k < indices.size(); ++k)
    out << (k ? ", " : "") << indices[k];
  out << "}\n";
  if (I.excluded_N)
    out << "some subcodes have lcm N = " << spec.N << " and are not quasi-cyclic\n";
  return kExitOk;
}

int cmd_enumerate(const SpecArgs &a, OutputFormat format,
                  const EnumerationOptions &opts, bool factored,
                  std::ostream &out) {
  const CodeSpec spec = validate_spec(a.q, a.n, a.zeros);
  OutputRecord rec = make_record(multiplicity_table(spec, opts), "generic");
  if (factored)
    add_factorizations(rec);
  out << render(rec, format);
  return kExitOk;
}

int cmd_closed_form(const FamilySpec &fs, OutputFormat format, std::ostream &out) {
  const ClosedFormTable t = evaluate(fs);
  const DiscrepancyReport rep = compare_with_generic(t);

  if (format == OutputFormat::Json) {
    OutputRecord rec = make_record(t.spec, t.normalized, "closed-form");
    nlohmann::json j = to_json(rec);
    j["family"] = std::string(family_name(fs.family));
    j["literal"] = rows_json(t.literal);
    auto cmp = nlohmann::json::array();
    for (const auto &row : rep.rows)
      cmp.push_back({{"index", row.index},
                     {"closed_form", row.closed_form ? row.closed_form->str() : "-"},
                     {"generic", row.generic ? row.generic->str() : "-"},
                     {"match", row.match}});
    j["comparison"] = std::move(cmp);
    j["all_match"] = rep.all_match;
    out << j.dump() << '\n';
  } else if (format == OutputFormat::Csv) {
    out << "index,closed_form,generic,match\n";
    for (const auto &row : rep.rows)
      out << row.index << ',' << (row.closed_form ? row.closed_form->str() : "")
          << ',' << (row.generic ? row.generic->str() : "") << ','
          << (row.match ? "yes" : "no") << '\n';
  } else {
    out << "family " << family_name(fs.family) << ": q = " << t.spec.q
        << ", n = " << t.spec.n << ", N = " << t.spec.N
        << ", zeros = " << list_string(t.spec.zeros) << '\n';
    out << "literal:    " << bracket_rows(t.literal) << '\n';
    out << "normalized: " << bracket_rows(t.normalized) << '\n';
    out << std::setw(22) << "index" << std::setw(28) << "closed-form"
        << std::setw(28) << "generic" << "  status\n";
    for (const auto &row : rep.rows)
      out << std::setw(22) << row.index << std::setw(28)
          << (row.closed_form ? row.closed_form->str() : "-") << std::setw(28)
          << (row.generic ? row.generic->str() : "-") << "  "
          << (row.match ? "match" : "MISMATCH") << '\n';
    out << (rep.all_match ? "all indices match\n" : "discrepancy found\n");
  }
  return rep.all_match ? kExitOk : kExitMismatch;
}

struct VerifyArgs {
  SpecArgs spec;
  std::optional<std::uint64_t> cap;
  std::uint64_t samples = 100;
  unsigned workers = 0;
};

int cmd_verify(const VerifyArgs &va, const EnumerationOptions &opts,
               OutputFormat format, std::ostream &out) {
  const CodeSpec spec = validate_spec(va.spec.q, va.spec.n, va.spec.zeros);
  const std::uint64_t cap = va.cap ? *va.cap : oracle_cap_from_env();
  const ExtField F = oracle_field(spec, cap);

  const IndexTable measured = measured_histogram(spec, F, opts, cap, va.workers);
  const IndexTable symbolic = multiplicity_table(spec, opts);

  VerificationReport hist;
  hist.name = "histogram";
  hist.passed = measured == symbolic;
  hist.checked = static_cast<std::uint64_t>(grand_total(spec));
  hist.detail = "measured " + bracket_rows(measured.entries) + " / symbolic " +
                bracket_rows(symbolic.entries);

  std::vector<VerificationReport> reports{
      hist, verify_distinctness(spec, F, cap), verify_trace_nondegeneracy(spec, F),
      verify_shift_lemma(spec, F, va.samples)};
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const VerificationReport &r) { return r.passed; });

  if (format == OutputFormat::Json) {
    nlohmann::json j = to_json(make_record(measured, "oracle"));
    auto checks = nlohmann::json::array();
    for (const auto &r : reports)
      checks.push_back({{"name", r.name},
                        {"passed", r.passed},
                        {"checked", r.checked},
                        {"observed", r.observed},
                        {"detail", r.detail}});
    j["checks"] = std::move(checks);
    j["passed"] = ok;
    out << j.dump() << '\n';
  } else {
    out << to_human(make_record(measured, "oracle"));
    for (const auto &r : reports)
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    out << (ok ? "PASS\n" : "FAIL\n");
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_subspaces(std::uint64_t q, unsigned n, OutputFormat format,
                  std::ostream &out) {
  if (!prime_power_decomposition(q).first)
    fail(ErrorKind::InvalidParameter, "q must be a prime power");
  if (n < 1)
    fail(ErrorKind::InvalidParameter, "n must be positive");
  const MaximalCountTable t = maximal_counts(factorize(n), BigCount(q));
  const BigCount total = subspace_total(n, BigCount(q));
  if (t.sum() != total)
    fail(ErrorKind::VerificationFailure, "maximal counts do not sum to the total");

  if (format == OutputFormat::Json) {
    auto rows = nlohmann::json::array();
    for (const auto &[d, c] : t.by_divisor)
      rows.push_back({{"d", d}, {"count", c.str()}});
    nlohmann::json j{{"q", q}, {"n", n}, {"maximal", rows}, {"total", total.str()}};
    out << j.dump() << '\n';
  } else if (format == OutputFormat::Csv) {
    out << "d,count\n";
    for (const auto &[d, c] : t.by_divisor)
      out << d << ',' << c << '\n';
  } else {
    out << "q = " << q << ", n = " << n << '\n';
    for (const auto &[d, c] : t.by_divisor)
      out << "d = " << d << ": " << c << '\n';
    out << "total: " << total << '\n';
  }
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Quasi-cyclic subcode indices and multiplicities of cyclic codes "
               "of length q^n - 1"};
  app.name("qcenum");
  app.require_subcommand(1);

  std::string format_tag = "human";
  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", format_tag, "human, csv or json")
        ->check(CLI::IsMember({"human", "table", "csv", "json"}));
  };

  SpecArgs idx_args;
  auto *indices = app.add_subcommand("indices", "index set and contribution matrix");
  add_spec_options(indices, idx_args);
  add_format(indices);

  SpecArgs en_args;
  bool include_full = false, include_zero = false, no_index_n = false, factored = false;
  auto *enumerate = app.add_subcommand("enumerate", "multiplicity of each index");
  add_spec_options(enumerate, en_args);
  add_format(enumerate);
  enumerate->add_flag("--include-full", include_full, "count C itself at index 1");
  enumerate->add_flag("--include-zero", include_zero, "count the zero code at index 1");
  enumerate->add_flag("--no-index-n", no_index_n, "omit the index-N tally");
  enumerate->add_flag("--factored", factored, "show factorizations of the counts");

  std::string family_tag;
  FamilySpec fs;
  auto *closed = app.add_subcommand("closed-form", "closed-form counts for a code family");
  closed->add_option("--family", family_tag,
                     "simplex, bch2-binary-primepower, bch2-binary-twoprimes or "
                     "bch3-pary-twoprimes")
      ->required();
  closed->add_option("--q", fs.q);
  closed->add_option("--n", fs.n);
  closed->add_option("--u", fs.u);
  closed->add_option("--a", fs.a);
  closed->add_option("--v", fs.v);
  closed->add_option("--p", fs.p);
  add_format(closed);

  VerifyArgs va;
  bool v_include_full = false, v_include_zero = false, v_no_index_n = false;
  auto *verify = app.add_subcommand("verify", "brute-force check over an explicit field");
  add_spec_options(verify, va.spec);
  add_format(verify);
  verify->add_option("--cap", va.cap, "largest field size q^n to enumerate");
  verify->add_option("--samples", va.samples, "random tuples for the shift check");
  verify->add_option("--workers", va.workers, "threads, 0 for all cores");
  verify->add_flag("--include-full", v_include_full);
  verify->add_flag("--include-zero", v_include_zero);
  verify->add_flag("--no-index-n", v_no_index_n);

  SpecArgs sub_args;
  auto *subspaces = app.add_subcommand("subspaces", "subspace counts per field of definition");
  add_spec_options(subspaces, sub_args, false);
  add_format(subspaces);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_tag);
    if (*indices)
      return cmd_indices(idx_args, format, out);
    if (*enumerate) {
      EnumerationOptions opts;
      opts.exclude_full_code = !include_full;
      opts.exclude_zero_code = !include_zero;
      opts.report_index_N = !no_index_n;
      return cmd_enumerate(en_args, format, opts, factored, out);
    }
    if (*closed) {
      fs.family = parse_family(family_tag);
      return cmd_closed_form(fs, format, out);
    }
    if (*verify) {
      EnumerationOptions opts;
      opts.exclude_full_code = !v_include_full;
      opts.exclude_zero_code = !v_include_zero;
      opts.report_index_N = !v_no_index_n;
      return cmd_verify(va, opts, format, out);
    }
    if (*subspaces)
      return cmd_subspaces(sub_args.q, sub_args.n, format, out);
  } catch (const Error &e) {
    err << e.name() << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::VerificationFailure ? kExitMismatch : kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace qcenum
