#pragma once

#include <string>
#include <vector>

#include "innerdist/grid.hpp"

namespace innerdist {

enum class SquareKind { plain, pandiagonal, sudoku };

std::string to_string(SquareKind kind);
/// Parses "plain" | "latin" | "pandiagonal" | "sudoku"; throws DomainError.
SquareKind parse_square_kind(const std::string& text);

/// The class of squares a bound or a search refers to.
struct SquareClass {
  SquareKind kind = SquareKind::plain;
  int n = 0;
  SudokuShape shape{};  // meaningful for sudoku only

  static SquareClass plain(int n) { return {SquareKind::plain, n, {1, n}}; }
  static SquareClass pandiagonal(int n) { return {SquareKind::pandiagonal, n, {1, n}}; }
  static SquareClass sudoku(SudokuShape s) { return {SquareKind::sudoku, s.order(), s}; }
};

/// Known lower/upper bounds on the maximum inner distance of a class.
struct BoundsEntry {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  /// False when the class is empty (pandiagonal of order divisible by 2 or 3).
  bool existence = true;
  /// Which results produced the bounds, in plain words.
  std::vector<std::string> provenance;
};

/// Sudoku shapes are normalized to a <= b first, so (a, b) and (b, a) agree.
/// Throws DomainError on non-positive sizes.
BoundsEntry known_bounds(const SquareClass& cls);

}  // namespace innerdist
