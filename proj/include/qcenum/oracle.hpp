#pragma once

// Brute-force verification over an explicitly constructed field: build the
// trace-representation subcodes literally, measure their shift-invariance
// index, and tally. Shares no code path with the symbolic engine beyond
// CodeSpec validation and the IndexTable result type.

#include "qcenum/enumeration.hpp"
#include "qcenum/gf.hpp"
#include "qcenum/linalg.hpp"
#include "qcenum/numth.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcenum {

inline constexpr std::uint64_t kDefaultOracleCap = 256;

/// QCENUM_ORACLE_CAP when set, else the default. Throws InvalidParameter
/// when the variable is set but not a positive integer.
std::uint64_t oracle_cap_from_env();

/// F_p-subspace of F_{p^m}. Rows of the basis are coordinate vectors in the
/// polynomial basis, in canonical reduced row-echelon form.
class Subspace {
public:
  explicit Subspace(RowEchelon basis) : basis_(std::move(basis)) {}

  static Subspace zero(const ExtField &F);
  static Subspace whole(const ExtField &F);
  static Subspace span(const ExtField &F, const std::vector<FieldElement> &gens);

  std::size_t dim() const { return basis_.rank(); }
  const RowEchelon &basis() const { return basis_; }
  std::vector<FieldElement> basis_elements(const ExtField &F) const;
  bool contains(const ExtField &F, FieldElement x) const;

  bool operator==(const Subspace &) const = default;

private:
  RowEchelon basis_;
};

/// Streams every nonzero subspace exactly once: by dimension, then by the
/// lexicographic order of the flattened RREF matrix.
class SubspaceEnumerator {
public:
  /// Throws CapExceeded when p^m > cap.
  SubspaceEnumerator(const ExtField &F, std::uint64_t cap = kDefaultOracleCap);

  std::optional<Subspace> next();

private:
  void fill(unsigned dim);

  const ExtField *field_;
  unsigned dim_ = 0;
  std::vector<Subspace> batch_;
  std::size_t pos_ = 0;
};

std::vector<Subspace> enumerate_subspaces(const ExtField &F,
                                          std::uint64_t cap = kDefaultOracleCap);

/// Largest d | m such that V is closed under multiplication by a generator
/// of F_{p^d}. Throws InvalidArgument for the zero space.
unsigned maximal_field_of(const ExtField &F, const Subspace &V);

std::map<unsigned, std::uint64_t>
classify_all_subspaces(const ExtField &F, std::uint64_t cap = kDefaultOracleCap);

/// Codeword (Tr(sum_j beta_j alpha^(k i_j)))_{0 <= k < N}.
FpVector trace_word(const ExtField &F, const std::vector<std::uint64_t> &zeros,
                    const std::vector<FieldElement> &betas);

/// Cyclic shift T(u_1, ..., u_N) = (u_N, u_1, ..., u_{N-1}) applied t times.
FpVector cyclic_shift(const FpVector &w, std::size_t t = 1);

struct TraceCode {
  CodeSpec spec;
  std::vector<Subspace> spaces;
  RowEchelon generator;

  std::size_t dimension() const { return generator.rank(); }
};

/// The field must be F_{q^n} for the spec's q (prime) and n.
TraceCode build_subcode(const CodeSpec &spec, const ExtField &F,
                        const std::vector<Subspace> &spaces);

/// Smallest divisor l of the length with every generator row, shifted by l,
/// inside the row space. Throws InvalidArgument for the zero code.
std::uint64_t qc_index(const RowEchelon &code);
std::uint64_t qc_index(const TraceCode &code);

/// Builds the canonical field for the spec, enforcing that q is prime and
/// q^n <= cap (CapExceeded otherwise).
ExtField oracle_field(const CodeSpec &spec, std::uint64_t cap = kDefaultOracleCap,
                      const FieldOverrides &overrides = {});

/// Builds every subcode (zero space or a nonzero subspace per zero),
/// measures its index and tallies, applying the same exclusions as
/// multiplicity_table. The zero code counts as index 1. workers = 0 picks
/// the hardware concurrency; the result does not depend on it.
IndexTable measured_histogram(const CodeSpec &spec, const ExtField &F,
                              const EnumerationOptions &opts = {},
                              std::uint64_t cap = kDefaultOracleCap,
                              unsigned workers = 0);

struct VerificationReport {
  std::string name;
  bool passed = false;
  std::uint64_t checked = 0;
  /// Check-specific count: distinct codes, annihilating tuples, mismatches.
  std::uint64_t observed = 0;
  std::string detail;
};

/// Every tuple of spaces yields a distinct code; observed = distinct codes.
VerificationReport verify_distinctness(const CodeSpec &spec, const ExtField &F,
                                       std::uint64_t cap = kDefaultOracleCap);

/// Counts coefficient tuples (lambda_j) with Tr(sum lambda_j x^(i_j)) = 0 for
/// every x. Exhaustive when |F|^s <= exhaustive_limit, otherwise samples
/// that many random tuples (redraws of the zero tuple skipped) plus the
/// zero tuple. The raw exponents are not
/// validated, so short cosets can be probed. observed = annihilators found.
VerificationReport count_trace_annihilators(const ExtField &F,
                                            const std::vector<std::uint64_t> &zeros,
                                            std::uint64_t exhaustive_limit = 1 << 16,
                                            std::uint64_t seed = 1);

/// Passes iff the zero tuple is the only annihilator.
VerificationReport verify_trace_nondegeneracy(const CodeSpec &spec,
                                              const ExtField &F,
                                              std::uint64_t exhaustive_limit = 1 << 16);

/// T(word(beta)) = word(beta_j alpha^(-i_j)) for random coefficient tuples.
VerificationReport verify_shift_lemma(const CodeSpec &spec, const ExtField &F,
                                      std::uint64_t samples = 100,
                                      std::uint64_t seed = 1);

} // namespace qcenum
