#include "qcenum/linalg.hpp"

#include "qcenum/error.hpp"
#include "qcenum/numth.hpp"

#include <algorithm>

namespace qcenum {

namespace {

void axpy(FpVector &y, std::uint64_t a, const FpVector &x, std::uint32_t p) {
  // y -= a * x
  if (a == 0)
    return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i])
      y[i] = static_cast<std::uint32_t>((y[i] + p - a * x[i] % p) % p);
}

} // namespace

bool is_zero_vector(const FpVector &v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

RowEchelon RowEchelon::from_rows(std::uint32_t p, std::size_t cols,
                                 const std::vector<FpVector> &rows) {
  RowEchelon e(p, cols);
  for (const auto &r : rows)
    e.insert(r);
  return e;
}

FpVector RowEchelon::reduce(FpVector v) const {
  if (v.size() != cols_)
    fail(ErrorKind::InvalidArgument, "vector length does not match");
  for (std::size_t k = 0; k < rows_.size(); ++k)
    axpy(v, v[pivots_[k]], rows_[k], p_);
  return v;
}

bool RowEchelon::contains(const FpVector &v) const {
  return is_zero_vector(reduce(v));
}

bool RowEchelon::insert(FpVector v) {
  v = reduce(std::move(v));
  const auto it = std::find_if(v.begin(), v.end(),
                               [](std::uint32_t x) { return x != 0; });
  if (it == v.end())
    return false;
  const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
  const std::uint64_t scale = powmod(*it, p_ - 2, p_);
  for (auto &x : v)
    x = static_cast<std::uint32_t>(x * scale % p_);
  // Clear the new pivot column from the existing rows.
  for (auto &row : rows_)
    axpy(row, row[pivot], v, p_);
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

} // namespace qcenum
