#pragma once

// Exact number of quasi-cyclic subcodes of each index.
//
// A subcode is a tuple (V_1, ..., V_s) of F_q-subspaces of F_{q^n}, one per
// dual zero, and distinct tuples give distinct subcodes. A zero whose space
// is maximally defined over F_{q^d} contributes ell(i_j, L_d) to the index;
// the zero space contributes 1. The subcode's index is the lcm of the
// contributions, so the table is a fold of per-zero option lists under
// (lcm, product).

#include "qcenum/bigcount.hpp"
#include "qcenum/numth.hpp"

#include <cstdint>
#include <map>

namespace qcenum {

struct EnumerationOptions {
  /// Drop the zero code from the index-1 bucket.
  bool exclude_zero_code = true;
  /// Drop the code C itself from the index-1 bucket.
  bool exclude_full_code = true;
  /// Move the lcm = N bucket into index_N_count. When false the bucket is
  /// dropped and index_N_count stays zero.
  bool report_index_N = true;

  bool operator==(const EnumerationOptions &) const = default;
};

struct IndexTable {
  CodeSpec spec;
  /// One entry per attainable index (1 is always present, possibly with a
  /// zero count once the trivial codes are excluded). N never appears.
  std::map<std::uint64_t, BigCount> entries;
  /// Tuples whose contributions have lcm N.
  BigCount index_N_count = 0;
  EnumerationOptions options;

  BigCount entries_sum() const;
  bool operator==(const IndexTable &) const = default;
};

IndexTable multiplicity_table(const CodeSpec &spec,
                              const EnumerationOptions &opts = {});

/// (subspace_total(n, q) + 1)^s: every tuple, zero spaces included.
BigCount grand_total(const CodeSpec &spec);

} // namespace qcenum
