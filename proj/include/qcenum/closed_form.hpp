#pragma once

// Closed-form counts of quasi-cyclic subcodes for specific code families,
// transcribed from their theorem statements, plus a comparison against the
// generic enumeration engine.
//
// Theorem-literal tables count the code C itself among the cyclic subcodes
// ("3 cyclic subcodes, including itself"). The normalized table subtracts
// it so that index 1 counts proper nonzero cyclic subcodes, the convention
// of multiplicity_table's default options.

#include "qcenum/bigcount.hpp"
#include "qcenum/numth.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcenum {

enum class Family {
  Simplex,              // zeros {1}, any q, any n
  Bch2BinaryPrimePower, // q = 2, zeros {1, 3}, n = u^(a-1)
  Bch2BinaryTwoPrimes,  // q = 2, zeros {1, 3}, n = u v
  Bch3ParyTwoPrimes,    // q = p odd, zeros {1, 2}, n = u v
};

std::string_view family_name(Family f);
/// Accepts the CLI tags ("simplex", "bch2-binary-primepower", ...).
Family parse_family(std::string_view tag);

struct FamilySpec {
  Family family = Family::Simplex;
  std::uint64_t q = 0; // simplex
  unsigned n = 0;      // simplex
  std::uint64_t u = 0;
  unsigned a = 0;
  std::uint64_t v = 0;
  std::uint64_t p = 0;
};

struct ClosedFormTable {
  FamilySpec family;
  /// The cyclic code the family describes.
  CodeSpec spec;
  std::map<std::uint64_t, BigCount> literal;
  std::map<std::uint64_t, BigCount> normalized;
};

/// Index L_d -> subspaces maximally defined over F_{q^d}, skipping the
/// divisor whose index is N (only d = 1 with q = 2).
ClosedFormTable simplex_counts(std::uint64_t q, const Factorization &n_fact);

/// Dual of the binary double-error-correcting BCH code, n = u^(a-1).
/// (u, a) = (2, 2) is rejected with InvalidArgument.
ClosedFormTable bch2_binary_primepower(std::uint64_t u, unsigned a);

/// Dual of the binary double-error-correcting BCH code, n = u v.
ClosedFormTable bch2_binary_twoprimes(std::uint64_t u, std::uint64_t v);

/// Dual of the p-ary BCH code of designed distance 3, n = u v.
ClosedFormTable bch3_pary_twoprimes(std::uint64_t p, std::uint64_t u,
                                    std::uint64_t v);

ClosedFormTable evaluate(const FamilySpec &family);

struct DiscrepancyRow {
  std::uint64_t index = 0;
  std::optional<BigCount> closed_form;
  std::optional<BigCount> generic;
  bool match = false;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyRow> rows;
  bool all_match = true;
};

/// Compares the normalized table with multiplicity_table(spec) under the
/// default options. An index absent on one side counts as zero there.
DiscrepancyReport compare_with_generic(const ClosedFormTable &table);

} // namespace qcenum
