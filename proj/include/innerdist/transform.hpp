#pragma once

#include <vector>

#include "innerdist/grid.hpp"

namespace innerdist {

/// Row, column and symbol bijections on {1..n}, each stored 1-based as
/// image[k - 1] = sigma(k).
struct GridPermutation {
  std::vector<int> rows;
  std::vector<int> columns;
  std::vector<int> symbols;

  static GridPermutation identity(int n);
  /// Throws DomainError unless all three are bijections on {1..n}.
  void check(int n) const;

  friend bool operator==(const GridPermutation&, const GridPermutation&) = default;
};

/// m'(sigma_r(i), sigma_c(j)) = sigma_s(m(i, j)).
SquareGrid apply(const SquareGrid& g, const GridPermutation& p);

SquareGrid transpose(const SquareGrid& g);

/// m(i, j) == m(i-1, j-1) with wraparound.
bool is_circulant(const SquareGrid& g);
/// m(i, j) == m(i-1, j+1) with wraparound.
bool is_back_circulant(const SquareGrid& g);

struct CanonicalResult {
  SquareGrid square;
  GridPermutation permutation;
};

/// Reduces a square whose rows are all cyclic shifts of one symbol order
/// (every shift-fill and shift-by-k square) to the circulant shift_by_k(n, 1).
///
/// Symbols are first shifted so m(1,1) = 1, columns are then permuted so the
/// first row reads 1..n, and rows are finally ordered by their leading symbol.
/// Throws DomainError if a row is not a cyclic shift after the column step;
/// that only means this reduction does not apply, not that the square is
/// non-isotopic to a circulant.
CanonicalResult to_circulant_canonical(const SquareGrid& g);

}  // namespace innerdist
