#pragma once

#include <string_view>
#include <vector>

#include "innerdist/grid.hpp"

namespace innerdist {

enum class LineKind { row, column, forward_diagonal, back_diagonal, block };

std::string_view to_string(LineKind kind);

/// One symbol that occurs more than once in a row, column, diagonal or block.
///
/// `index` is the 1-based row/column number; for diagonals it is the class
/// (i - j) mod n or (i + j) mod n in [0, n); for blocks `block` is set and
/// `index` is the row-major block number.
struct Violation {
  LineKind kind = LineKind::row;
  int index = 0;
  BlockAddress block{};
  int symbol = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool verdict = true;
  std::vector<Violation> violations;
};

ValidationReport validate_latin(const SquareGrid& g);
/// Latin plus every wrapped forward and back diagonal Latin.
ValidationReport validate_pandiagonal(const SquareGrid& g);
/// Latin plus every a x b block Latin. Throws DomainError if a*b != order.
ValidationReport validate_sudoku(const SquareGrid& g, SudokuShape shape);

}  // namespace innerdist
