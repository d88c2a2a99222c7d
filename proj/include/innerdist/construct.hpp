#pragma once

#include <cstdint>
#include <vector>

#include "innerdist/grid.hpp"

namespace innerdist {

/// Parameters of the shifted-increment fill
///   m(i,j) = 1 + (i-1)r + (j-1)c + alpha*floor((i-1)/R) + beta*floor((j-1)/C)  (mod n)
/// with R = n / gcd(n, r) rows per band and C = n / gcd(n, c) columns per stack.
///
/// r and c are stored normalized to [1, n-1]; alpha and beta are kept as given.
struct ShiftParams {
  int n = 0;
  int r = 0;      // vertical increment inside a band
  int c = 0;      // horizontal increment inside a stack
  int alpha = 0;  // extra offset when crossing into the next band
  int beta = 0;   // extra offset when crossing into the next stack

  int band_height() const;  // R
  int stack_width() const;  // C
};

/// Normalizes r, c and checks 1 <= r,c <= n-1, gcd(|alpha|, r) = 1 and
/// gcd(|beta|, c) = 1. Throws ParameterError otherwise.
ShiftParams make_shift_params(int n, std::int64_t r, std::int64_t c,
                              std::int64_t alpha, std::int64_t beta);

SquareGrid algorithm1(const ShiftParams& p);

/// Smallest adjacent-distance class actually present in algorithm1(p).
/// The band-crossing class (r + alpha) only counts when R < n, and the
/// stack-crossing class (c + beta) only when C < n.
int predicted_inner_distance(const ShiftParams& p);

/// Row i+1 is row i shifted right by k; first row is 1..n.
SquareGrid shift_by_k(int n, std::int64_t k);

/// A Latin square of order n >= 2 with inner distance floor((n-1)/2)
/// (1 for n = 2).
SquareGrid max_distance_square(int n);

/// Pandiagonal square with inner distance (n-3)/2; n = 1, 5 (mod 6).
/// Throws NonexistenceError for other orders.
SquareGrid pandiagonal_max(int n);

/// (2, b)-Sudoku square with inner distance b - 1.
SquareGrid sudoku_2b(int b);

/// (a, b)-Sudoku square for odd b >= a with inner distance (ab - a)/2.
SquareGrid sudoku_a_odd_b(int a, int b);

/// Cell type of a row in the even-by-even construction.
enum class RowType { plain, band_start, even_band_odd_row, odd_band_odd_row };

/// Row type of row k >= 1 for block height a (even).
RowType row_type(int k, int a);

/// Offset added to the vertical increment entering row k: 0, -a/2, +1 or -1.
int row_offset(int k, int a);

/// (2x, 2y)-Sudoku square with inner distance 2xy - x; requires 2 <= x <= y.
SquareGrid algorithm2(int x, int y);

/// (a, b)-Sudoku square for odd a, even b >= a. Inner distance is
/// (n - min(2a, b))/2 when 4 | b and (n - min(4a, b))/2 when b = 2 (mod 4).
SquareGrid sudoku_odd_a_even_b(int a, int b);

/// Best available construction for any (a, b); a > b is built as the
/// transpose of the (b, a) square.
SquareGrid sudoku_square(SudokuShape shape);

}  // namespace innerdist
