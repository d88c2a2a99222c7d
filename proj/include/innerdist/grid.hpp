#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace innerdist {

/// An n x n array of symbols in [1, n], stored row-major.
///
/// Indices at the public surface are 1-based to follow the (i, j) cell
/// convention: i counts rows top-down, j counts columns left-right.
/// A grid is immutable once built; every constructor checks the symbol range.
class SquareGrid {
 public:
  /// Builds from rows; throws ParseError if not square or a symbol is out of range.
  static SquareGrid from_rows(const std::vector<std::vector<int>>& rows);
  /// Builds from n*n row-major cells.
  static SquareGrid from_cells(int order, std::vector<int> cells);

  int order() const { return order_; }
  /// Entry of cell (i, j), 1-based.
  int at(int i, int j) const;
  /// Row i (1-based) as a view.
  std::span<const int> row(int i) const;
  std::span<const int> cells() const { return cells_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const SquareGrid&, const SquareGrid&) = default;
  /// Lexicographic on (order, row-major cells).
  friend std::strong_ordering operator<=>(const SquareGrid& lhs,
                                          const SquareGrid& rhs);

 private:
  SquareGrid(int order, std::vector<int> cells)
      : order_(order), cells_(std::move(cells)) {}

  int order_ = 0;
  std::vector<int> cells_;
};

/// Block shape of an (a, b)-Sudoku square: a rows by b columns, order a*b.
struct SudokuShape {
  int a = 1;
  int b = 1;

  int order() const { return a * b; }
  friend bool operator==(const SudokuShape&, const SudokuShape&) = default;
};

/// Band index (row group of height a) and stack index (column group of width b).
struct BlockAddress {
  int band = 0;
  int stack = 0;

  friend bool operator==(const BlockAddress&, const BlockAddress&) = default;
};

/// Block containing cell (i, j). Throws DomainError when out of range.
BlockAddress block_of(int i, int j, SudokuShape shape);

}  // namespace innerdist
