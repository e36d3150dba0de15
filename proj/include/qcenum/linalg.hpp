#pragma once

// Row-reduced echelon forms over a prime field F_p.

#include <cstdint>
#include <vector>

namespace qcenum {

using FpVector = std::vector<std::uint32_t>;

/// Canonical basis of a row space: rows nonzero, pivots strictly increasing,
/// every pivot equal to 1 and the only nonzero entry of its column. Two
/// spans are equal iff their RowEchelon values compare equal.
class RowEchelon {
public:
  RowEchelon(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

  static RowEchelon from_rows(std::uint32_t p, std::size_t cols,
                              const std::vector<FpVector> &rows);

  std::uint32_t p() const { return p_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<FpVector> &rows() const { return rows_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  /// v minus its projection onto the span (zero iff v is in the span).
  FpVector reduce(FpVector v) const;
  bool contains(const FpVector &v) const;
  /// Adds v to the span; returns false if it was already there.
  bool insert(FpVector v);

  bool operator==(const RowEchelon &o) const {
    return p_ == o.p_ && cols_ == o.cols_ && rows_ == o.rows_;
  }
  bool operator<(const RowEchelon &o) const { return rows_ < o.rows_; }

private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero_vector(const FpVector &v);

} // namespace qcenum
