#pragma once

// Index contributions of each dual zero per intermediate field, and the
// resulting set of attainable quasi-cyclic indices.

#include "qcenum/numth.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace qcenum {

/// (q^n - 1) / (q^d - 1): least power of a primitive element of F_{q^n}
/// landing in F_{q^d}. Throws InvalidArgument unless d | n.
std::uint64_t L_value(std::uint64_t q, unsigned n, unsigned d);

/// Least ell >= 1 with i * ell a multiple of L, i.e. lcm(i, L) / i.
std::uint64_t ell(std::uint64_t i, std::uint64_t L);

/// Rows are divisors d of n (ascending), columns are the spec's zeros.
struct IndexContributionMatrix {
  CodeSpec spec;
  std::vector<std::uint64_t> divisors;
  std::vector<std::uint64_t> L;
  /// entries[row][col] = ell(zeros[col], L[row]).
  std::vector<std::vector<std::uint64_t>> entries;
};

IndexContributionMatrix contribution_matrix(const CodeSpec &spec);

struct IndexSet {
  std::set<std::uint64_t> indices;
  /// True when some choice produced lcm = N, which is not a QC index.
  bool excluded_N = false;
};

/// Attainable indices: lcms of at most one contribution per zero, plus 1,
/// minus N. Computed with the same fold the multiplicity table uses.
IndexSet index_set(const CodeSpec &spec);

/// Same set, built by materializing every selection of (zero subset,
/// field per selected zero) and taking lcms. For cross-checking.
IndexSet index_set_literal(const CodeSpec &spec);

} // namespace qcenum
