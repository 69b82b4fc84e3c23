#pragma once

// Fraction-free row echelon over A for "which leading columns does a span
// reach" questions. Rows are inserted in input order; a row whose leading
// column is already a pivot is reduced against the pivot row and retried.

#include "dlab/theta_poly.hpp"

#include <map>
#include <vector>

namespace dlab {

using RowA = std::vector<ThetaPoly>;

struct EchelonRow {
  RowA entries;     ///< over the columns
  RowA combination; ///< coefficients of the input rows (empty if untracked)
};

struct Echelon {
  /// Leading column -> row; the keys are exactly the leading columns
  /// reached by nonzero elements of the span.
  std::map<long, EchelonRow> pivots;
  /// Input indices of rows that reduced to zero (dependent).
  std::vector<size_t> dependent;
  long rank() const { return static_cast<long>(pivots.size()); }
};

/// Echelonizes rows (all of equal length). With track = true each pivot
/// row carries its combination of the inputs with coefficients in A.
Echelon echelonize(const std::vector<RowA>& rows, bool track = true);

} // namespace dlab
