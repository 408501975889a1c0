#pragma once

#include "degflag/common.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace degflag {

/// A box (column, row) in the n x 2n grid, both 1-based.
struct Box {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A Dellac configuration: n columns, 2n rows, two boxes per column, one per
/// row, and every box (l, j) inside the band l <= j <= n + l.
///
/// Stored column-major: column l holds its two rows in increasing order.
/// Instances are always valid; use validate_dellac() on untrusted input.
class DellacConfig {
public:
  /// Throws StructuralError for out-of-grid boxes and InvalidArgument when a
  /// Dellac constraint is violated.
  static DellacConfig from_boxes(int n, const std::vector<Box>& boxes);

  /// Column-major rows, 2n entries: rows of column 1, then column 2, ...
  /// Each pair must be increasing. Same error behaviour as from_boxes.
  static DellacConfig from_column_rows(int n, const std::vector<int>& rows);

  int n() const { return n_; }
  const std::array<int, 2>& column(int l) const { return columns_.at(static_cast<std::size_t>(l - 1)); }
  /// Column holding the unique box in row j.
  int column_of_row(int j) const { return row_to_col_.at(static_cast<std::size_t>(j - 1)); }
  bool contains(int col, int row) const;

  /// Boxes sorted lexicographically by (col, row).
  std::vector<Box> boxes() const;
  std::vector<int> column_rows() const;

  /// Plain-text grid, top row = 2n, '#' for a box, '.' otherwise.
  std::string grid() const;

  friend bool operator==(const DellacConfig& a, const DellacConfig& b) {
    return a.n_ == b.n_ && a.columns_ == b.columns_;
  }
  friend bool operator<(const DellacConfig& a, const DellacConfig& b) {
    return a.columns_ < b.columns_;
  }

private:
  DellacConfig(int n, std::vector<std::array<int, 2>> columns);

  int n_ = 0;
  std::vector<std::array<int, 2>> columns_;
  std::vector<int> row_to_col_;

  friend std::vector<DellacConfig> enumerate_dellac(int n, int jobs);
};

/// Structural problems (box outside the n x 2n grid, n < 1) throw
/// StructuralError; constraint violations are listed in the report.
ValidationReport validate_dellac(int n, const std::vector<Box>& boxes);

/// All configurations for n, lexicographic by the sorted box list.
/// `jobs` > 1 splits the search over the first column's pair; the output
/// order does not depend on it.
std::vector<DellacConfig> enumerate_dellac(int n, int jobs = 1);

/// Number of disorders: pairs (l1, j1), (l2, j2) with l1 < l2 and j1 > j2.
int length(const DellacConfig& d);

/// Column of the box in row n + 1.
int refinement_stat(const DellacConfig& d);

}  // namespace degflag
