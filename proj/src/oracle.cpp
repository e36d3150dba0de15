#include "qcenum/oracle.hpp"

#include "qcenum/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

namespace qcenum {

std::uint64_t oracle_cap_from_env() {
  const char *raw = std::getenv("QCENUM_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0')
    return kDefaultOracleCap;
  char *end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    fail(ErrorKind::InvalidParameter,
         std::string("QCENUM_ORACLE_CAP is not a positive integer: ") + raw);
  return v;
}

// --- Subspace -------------------------------------------------------------

Subspace Subspace::zero(const ExtField &F) {
  return Subspace(RowEchelon(F.p(), F.m()));
}

Subspace Subspace::whole(const ExtField &F) {
  std::vector<FieldElement> gens;
  std::uint32_t unit = 1;
  for (unsigned i = 0; i < F.m(); ++i, unit *= F.p())
    gens.emplace_back(unit);
  return span(F, gens);
}

Subspace Subspace::span(const ExtField &F, const std::vector<FieldElement> &gens) {
  RowEchelon e(F.p(), F.m());
  for (FieldElement g : gens)
    e.insert(F.coefficients(g));
  return Subspace(std::move(e));
}

std::vector<FieldElement> Subspace::basis_elements(const ExtField &F) const {
  std::vector<FieldElement> out;
  for (const auto &row : basis_.rows())
    out.push_back(F.from_coefficients(row));
  return out;
}

bool Subspace::contains(const ExtField &F, FieldElement x) const {
  return basis_.contains(F.coefficients(x));
}

// --- Enumeration ------------------------------------------------------------

SubspaceEnumerator::SubspaceEnumerator(const ExtField &F, std::uint64_t cap)
    : field_(&F) {
  if (F.size() > cap)
    fail(ErrorKind::CapExceeded, "|F| = " + std::to_string(F.size()) +
                                     " exceeds the oracle cap " +
                                     std::to_string(cap));
}

void SubspaceEnumerator::fill(unsigned dim) {
  const std::uint32_t p = field_->p();
  const unsigned m = field_->m();
  batch_.clear();
  pos_ = 0;

  std::vector<unsigned> pivots(dim);
  for (unsigned r = 0; r < dim; ++r)
    pivots[r] = r;
  while (true) {
    // Free cells: right of the row's pivot and outside every pivot column.
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned r = 0; r < dim; ++r)
      for (unsigned c = pivots[r] + 1; c < m; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c))
          free.emplace_back(r, c);

    std::vector<std::uint32_t> values(free.size(), 0);
    while (true) {
      std::vector<FpVector> rows(dim, FpVector(m, 0));
      for (unsigned r = 0; r < dim; ++r)
        rows[r][pivots[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f)
        rows[free[f].first][free[f].second] = values[f];
      batch_.emplace_back(RowEchelon::from_rows(p, m, rows));

      std::size_t k = 0;
      while (k < values.size() && values[k] == p - 1)
        values[k++] = 0;
      if (k == values.size())
        break;
      ++values[k];
    }

    // Next pivot combination in lexicographic order.
    int r = static_cast<int>(dim) - 1;
    while (r >= 0 && pivots[r] == m - dim + static_cast<unsigned>(r))
      --r;
    if (r < 0)
      break;
    ++pivots[r];
    for (unsigned k = static_cast<unsigned>(r) + 1; k < dim; ++k)
      pivots[k] = pivots[k - 1] + 1;
  }
  std::sort(batch_.begin(), batch_.end(),
            [](const Subspace &a, const Subspace &b) { return a.basis() < b.basis(); });
}

std::optional<Subspace> SubspaceEnumerator::next() {
  while (pos_ == batch_.size()) {
    if (dim_ == field_->m())
      return std::nullopt;
    fill(++dim_);
  }
  return batch_[pos_++];
}

std::vector<Subspace> enumerate_subspaces(const ExtField &F, std::uint64_t cap) {
  SubspaceEnumerator it(F, cap);
  std::vector<Subspace> out;
  while (auto V = it.next())
    out.push_back(std::move(*V));
  return out;
}

unsigned maximal_field_of(const ExtField &F, const Subspace &V) {
  if (V.dim() == 0)
    fail(ErrorKind::InvalidArgument, "the zero space has no maximal field");
  const auto basis = V.basis_elements(F);
  auto ds = divisors(F.m());
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
    const FieldElement g = F.subfield_generator(static_cast<unsigned>(*it));
    const bool closed = std::all_of(basis.begin(), basis.end(), [&](FieldElement b) {
      return V.contains(F, F.mul(b, g));
    });
    if (closed)
      return static_cast<unsigned>(*it);
  }
  return 1; // unreachable: every space is closed under F_p
}

std::map<unsigned, std::uint64_t> classify_all_subspaces(const ExtField &F,
                                                         std::uint64_t cap) {
  std::map<unsigned, std::uint64_t> hist;
  for (std::uint64_t d : divisors(F.m()))
    hist[static_cast<unsigned>(d)] = 0;
  SubspaceEnumerator it(F, cap);
  while (auto V = it.next())
    ++hist[maximal_field_of(F, *V)];
  return hist;
}

// --- Codes ------------------------------------------------------------------

FpVector trace_word(const ExtField &F, const std::vector<std::uint64_t> &zeros,
                    const std::vector<FieldElement> &betas) {
  if (zeros.size() != betas.size())
    fail(ErrorKind::InvalidArgument, "one coefficient per zero is required");
  const std::uint32_t N = F.order();
  const std::uint32_t p = F.p();
  FpVector w(N, 0);
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    if (betas[j].is_zero())
      continue;
    const std::uint64_t base = F.log(betas[j]);
    const std::uint64_t step = zeros[j] % N;
    std::uint64_t e = base;
    for (std::uint32_t k = 0; k < N; ++k) {
      w[k] = (w[k] + F.trace(F.antilog(e))) % p;
      e = (e + step) % N;
    }
  }
  return w;
}

FpVector cyclic_shift(const FpVector &w, std::size_t t) {
  const std::size_t N = w.size();
  FpVector out(N);
  for (std::size_t k = 0; k < N; ++k)
    out[(k + t) % N] = w[k];
  return out;
}

namespace {

void check_field_matches(const CodeSpec &spec, const ExtField &F) {
  if (F.p() != spec.q || F.m() != spec.n)
    fail(ErrorKind::InvalidArgument, "field does not match the code spec");
}

// Generator words contributed by V placed at zero slot j.
std::vector<FpVector> slot_words(const CodeSpec &spec, const ExtField &F,
                                 std::size_t j, const Subspace &V) {
  std::vector<FpVector> out;
  std::vector<FieldElement> betas(spec.s(), F.zero());
  for (FieldElement b : V.basis_elements(F)) {
    betas[j] = b;
    out.push_back(trace_word(F, spec.zeros, betas));
  }
  return out;
}

// The zero space followed by every nonzero subspace, shared by all slots.
// Words are linear in the coefficient, so each slot caches the words of the
// polynomial-basis elements and combines them per basis row.
struct TupleSpace {
  std::vector<Subspace> options;
  std::vector<std::vector<FpVector>> unit_words; // [slot][coordinate]
  std::uint64_t total = 1;
};

TupleSpace tuple_space(const CodeSpec &spec, const ExtField &F, std::uint64_t cap) {
  TupleSpace ts;
  ts.options.push_back(Subspace::zero(F));
  for (auto &V : enumerate_subspaces(F, cap))
    ts.options.push_back(std::move(V));
  ts.unit_words.resize(spec.s());
  for (std::size_t j = 0; j < spec.s(); ++j) {
    std::vector<FieldElement> betas(spec.s(), F.zero());
    std::uint32_t unit = 1;
    for (unsigned i = 0; i < F.m(); ++i, unit *= F.p()) {
      betas[j] = FieldElement(unit);
      ts.unit_words[j].push_back(trace_word(F, spec.zeros, betas));
    }
    ts.total *= ts.options.size();
  }
  return ts;
}

RowEchelon tuple_code(const CodeSpec &spec, const ExtField &F, const TupleSpace &ts,
                      std::uint64_t tuple) {
  const std::uint32_t p = F.p();
  RowEchelon code(p, F.order());
  const std::uint64_t radix = ts.options.size();
  for (std::size_t j = 0; j < spec.s(); ++j) {
    for (const auto &row : ts.options[tuple % radix].basis().rows()) {
      FpVector w(F.order(), 0);
      for (unsigned i = 0; i < F.m(); ++i) {
        if (row[i] == 0)
          continue;
        const auto &u = ts.unit_words[j][i];
        for (std::size_t k = 0; k < w.size(); ++k)
          w[k] = static_cast<std::uint32_t>((w[k] + std::uint64_t{row[i]} * u[k]) % p);
      }
      code.insert(std::move(w));
    }
    tuple /= radix;
  }
  return code;
}

} // namespace

TraceCode build_subcode(const CodeSpec &spec, const ExtField &F,
                        const std::vector<Subspace> &spaces) {
  check_field_matches(spec, F);
  if (spaces.size() != spec.s())
    fail(ErrorKind::InvalidArgument, "one subspace per zero is required");
  TraceCode code{spec, spaces, RowEchelon(F.p(), F.order())};
  for (std::size_t j = 0; j < spec.s(); ++j)
    for (auto &w : slot_words(spec, F, j, spaces[j]))
      code.generator.insert(std::move(w));
  return code;
}

std::uint64_t qc_index(const RowEchelon &code) {
  if (code.rank() == 0)
    fail(ErrorKind::InvalidArgument, "the zero code has no index");
  // Invariance shifts form a subgroup of Z/N, so the least one divides N.
  for (std::uint64_t l : divisors(code.cols())) {
    const bool invariant =
        std::all_of(code.rows().begin(), code.rows().end(), [&](const FpVector &r) {
          return code.contains(cyclic_shift(r, l));
        });
    if (invariant)
      return l;
  }
  return code.cols();
}

std::uint64_t qc_index(const TraceCode &code) { return qc_index(code.generator); }

ExtField oracle_field(const CodeSpec &spec, std::uint64_t cap,
                      const FieldOverrides &overrides) {
  if (!is_prime(spec.q))
    fail(ErrorKind::InvalidParameter, "the oracle supports prime q only");
  if (spec.N + 1 > cap)
    fail(ErrorKind::CapExceeded, "q^n = " + std::to_string(spec.N + 1) +
                                     " exceeds the oracle cap " +
                                     std::to_string(cap));
  return ExtField::build(static_cast<std::uint32_t>(spec.q), spec.n, overrides,
                         std::max(cap, kFieldTableCap));
}

IndexTable measured_histogram(const CodeSpec &spec, const ExtField &F,
                              const EnumerationOptions &opts, std::uint64_t cap,
                              unsigned workers) {
  check_field_matches(spec, F);
  const TupleSpace ts = tuple_space(spec, F, cap);
  const std::uint64_t full_dim = std::uint64_t{spec.n} * spec.s();

  struct Tally {
    std::map<std::uint64_t, std::uint64_t> by_index;
    std::uint64_t index_N = 0;
  };
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, ts.total));
  std::vector<Tally> tallies(workers);

  auto run = [&](unsigned w) {
    Tally &t = tallies[w];
    const std::uint64_t begin = ts.total * w / workers;
    const std::uint64_t end = ts.total * (w + 1) / workers;
    for (std::uint64_t tuple = begin; tuple < end; ++tuple) {
      const RowEchelon code = tuple_code(spec, F, ts, tuple);
      if (code.rank() == 0) {
        if (!opts.exclude_zero_code)
          ++t.by_index[1];
        continue;
      }
      if (code.rank() == full_dim && opts.exclude_full_code)
        continue;
      const std::uint64_t l = qc_index(code);
      if (l == spec.N)
        ++t.index_N;
      else
        ++t.by_index[l];
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w)
    threads.emplace_back(run, w);
  run(0);
  for (auto &th : threads)
    th.join();

  IndexTable table;
  table.spec = spec;
  table.options = opts;
  table.entries[1] = 0;
  for (const auto &t : tallies) {
    for (const auto &[l, c] : t.by_index)
      table.entries[l] += c;
    if (opts.report_index_N)
      table.index_N_count += t.index_N;
  }
  return table;
}

VerificationReport verify_distinctness(const CodeSpec &spec, const ExtField &F,
                                       std::uint64_t cap) {
  check_field_matches(spec, F);
  const TupleSpace ts = tuple_space(spec, F, cap);
  std::set<RowEchelon> seen;
  for (std::uint64_t tuple = 0; tuple < ts.total; ++tuple)
    seen.insert(tuple_code(spec, F, ts, tuple));
  VerificationReport r;
  r.name = "distinctness";
  r.checked = ts.total;
  r.observed = seen.size();
  r.passed = r.observed == r.checked;
  r.detail = std::to_string(r.observed) + " distinct codes from " +
             std::to_string(r.checked) + " subspace tuples";
  return r;
}

VerificationReport count_trace_annihilators(const ExtField &F,
                                            const std::vector<std::uint64_t> &zeros,
                                            std::uint64_t exhaustive_limit,
                                            std::uint64_t seed) {
  const std::size_t s = zeros.size();
  std::uint64_t space = 1;
  bool exhaustive = true;
  for (std::size_t j = 0; j < s; ++j) {
    if (space > exhaustive_limit / F.size()) {
      exhaustive = false;
      break;
    }
    space *= F.size();
  }

  VerificationReport r;
  r.name = "trace-nondegeneracy";
  auto test = [&](const std::vector<FieldElement> &lambda) {
    ++r.checked;
    if (is_zero_vector(trace_word(F, zeros, lambda)))
      ++r.observed;
  };
  std::vector<FieldElement> lambda(s, F.zero());
  if (exhaustive) {
    for (std::uint64_t t = 0; t < space; ++t) {
      std::uint64_t x = t;
      for (std::size_t j = 0; j < s; ++j) {
        lambda[j] = FieldElement(static_cast<std::uint32_t>(x % F.size()));
        x /= F.size();
      }
      test(lambda);
    }
  } else {
    test(lambda);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.size() - 1);
    for (std::uint64_t t = 0; t < exhaustive_limit; ++t) {
      bool nonzero = false;
      for (auto &l : lambda) {
        l = FieldElement(pick(rng));
        nonzero = nonzero || !l.is_zero();
      }
      if (nonzero)
        test(lambda);
    }
  }
  r.passed = r.observed == 1;
  r.detail = std::to_string(r.observed) + " annihilating tuples among " +
             std::to_string(r.checked) + (exhaustive ? " (exhaustive)" : " (sampled)");
  return r;
}

VerificationReport verify_trace_nondegeneracy(const CodeSpec &spec,
                                              const ExtField &F,
                                              std::uint64_t exhaustive_limit) {
  check_field_matches(spec, F);
  return count_trace_annihilators(F, spec.zeros, exhaustive_limit);
}

VerificationReport verify_shift_lemma(const CodeSpec &spec, const ExtField &F,
                                      std::uint64_t samples, std::uint64_t seed) {
  check_field_matches(spec, F);
  VerificationReport r;
  r.name = "shift-lemma";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, F.size() - 1);
  std::vector<FieldElement> beta(spec.s(), F.zero());
  for (std::uint64_t t = 0; t <= samples; ++t) {
    if (t > 0) // t == 0 checks the zero codeword
      for (auto &b : beta)
        b = FieldElement(pick(rng));
    std::vector<FieldElement> scaled(spec.s());
    for (std::size_t j = 0; j < spec.s(); ++j)
      scaled[j] = F.mul(beta[j], F.pow(F.alpha(), -static_cast<std::int64_t>(
                                                      spec.zeros[j] % F.order())));
    ++r.checked;
    if (cyclic_shift(trace_word(F, spec.zeros, beta)) !=
        trace_word(F, spec.zeros, scaled))
      ++r.observed;
  }
  r.passed = r.observed == 0;
  r.detail = std::to_string(r.observed) + " mismatches in " +
             std::to_string(r.checked) + " sampled tuples";
  return r;
}

} // namespace qcenum
