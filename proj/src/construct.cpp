#include "innerdist/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "innerdist/errors.hpp"
#include "innerdist/metrics.hpp"
#include "innerdist/modmath.hpp"
#include "innerdist/transform.hpp"
#include "innerdist/validate.hpp"

namespace innerdist {

namespace {

int circular(std::int64_t x, int n) {
  const std::int64_t f = ((x % n) + n) % n;
  return static_cast<int>(std::min<std::int64_t>(f, n - f));
}

SquareGrid checked(SquareGrid g, const ValidationReport& report,
                   const char* what) {
  if (!report.verdict) {
    throw std::logic_error(std::string(what) + " produced an invalid square");
  }
  return g;
}

SquareGrid checked_latin(SquareGrid g, const char* what) {
  auto report = validate_latin(g);
  return checked(std::move(g), report, what);
}

SquareGrid checked_sudoku(SquareGrid g, SudokuShape shape, const char* what) {
  auto report = validate_sudoku(g, shape);
  return checked(std::move(g), report, what);
}

SquareGrid trivial_square() { return SquareGrid::from_cells(1, {1}); }

}  // namespace

int ShiftParams::band_height() const {
  return n / static_cast<int>(gcd(n, r));
}

int ShiftParams::stack_width() const {
  return n / static_cast<int>(gcd(n, c));
}

ShiftParams make_shift_params(int n, std::int64_t r, std::int64_t c,
                              std::int64_t alpha, std::int64_t beta) {
  if (n < 2) throw ParameterError("shift fill needs order n >= 2");
  const std::int64_t rn = wrap1(r, n);
  const std::int64_t cn = wrap1(c, n);
  if (rn == n || cn == n) {
    throw ParameterError("r and c must be nonzero modulo n");
  }
  if (gcd(std::llabs(alpha), rn) != 1) {
    throw ParameterError("gcd(alpha, r) must be 1 (alpha=" +
                         std::to_string(alpha) + ", r=" + std::to_string(rn) +
                         ")");
  }
  if (gcd(std::llabs(beta), cn) != 1) {
    throw ParameterError("gcd(beta, c) must be 1 (beta=" +
                         std::to_string(beta) + ", c=" + std::to_string(cn) +
                         ")");
  }
  return ShiftParams{n, static_cast<int>(rn), static_cast<int>(cn),
                     static_cast<int>(alpha), static_cast<int>(beta)};
}

SquareGrid algorithm1(const ShiftParams& in) {
  // Re-run the checks so hand-built params cannot slip through.
  const ShiftParams p = make_shift_params(in.n, in.r, in.c, in.alpha, in.beta);
  const int n = p.n;
  const int bands = p.band_height();
  const int stacks = p.stack_width();
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const std::int64_t row_part =
        static_cast<std::int64_t>(i) * p.r + static_cast<std::int64_t>(p.alpha) * (i / bands);
    for (int j = 0; j < n; ++j) {
      const std::int64_t col_part =
          static_cast<std::int64_t>(j) * p.c + static_cast<std::int64_t>(p.beta) * (j / stacks);
      cells[static_cast<std::size_t>(i) * n + j] =
          static_cast<int>(wrap1(1 + row_part + col_part, n));
    }
  }
  return checked_latin(SquareGrid::from_cells(n, std::move(cells)), "algorithm1");
}

int predicted_inner_distance(const ShiftParams& p) {
  int best = std::min(circular(p.r, p.n), circular(p.c, p.n));
  if (p.band_height() < p.n) {
    best = std::min(best, circular(static_cast<std::int64_t>(p.r) + p.alpha, p.n));
  }
  if (p.stack_width() < p.n) {
    best = std::min(best, circular(static_cast<std::int64_t>(p.c) + p.beta, p.n));
  }
  return best;
}

SquareGrid shift_by_k(int n, std::int64_t k) {
  if (n < 1) throw DomainError("order must be positive");
  if (gcd(k, n) != 1) {
    throw ParameterError("shift k=" + std::to_string(k) +
                         " is not coprime to n=" + std::to_string(n));
  }
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cells[static_cast<std::size_t>(i) * n + j] =
          static_cast<int>(wrap1(1 + j - static_cast<std::int64_t>(i) * (k % n), n));
    }
  }
  return checked_latin(SquareGrid::from_cells(n, std::move(cells)), "shift_by_k");
}

SquareGrid max_distance_square(int n) {
  if (n < 2) throw DomainError("maximum-distance square needs n >= 2");
  if (n == 2) return algorithm1(make_shift_params(2, 1, 1, 1, 1));
  if (n % 2 == 1) {
    const int step = (n - 1) / 2;
    return algorithm1(make_shift_params(n, step, step, n, n));
  }
  // n/2 is admissible at band and stack boundaries, so offsets of 1 suffice.
  const int step = (n - 2) / 2;
  return algorithm1(make_shift_params(n, step, step, 1, 1));
}

SquareGrid pandiagonal_max(int n) {
  if (n < 1) throw DomainError("order must be positive");
  if (n % 6 != 1 && n % 6 != 5) {
    throw NonexistenceError("no pandiagonal Latin square of order " +
                            std::to_string(n) + " (requires n = 1, 5 mod 6)");
  }
  if (n == 1) return trivial_square();
  // Vertical step -(n-3)/2, horizontal step (n-1)/2: forward diagonals step
  // by 1 and back diagonals by 2, both units for n coprime to 6.
  const auto p = make_shift_params(n, -(n - 3) / 2, (n - 1) / 2, n, n);
  auto g = algorithm1(p);
  return checked(g, validate_pandiagonal(g), "pandiagonal_max");
}

SquareGrid sudoku_2b(int b) {
  if (b < 2) throw DomainError("sudoku_2b needs b >= 2");
  const int n = 2 * b;
  const auto p = make_shift_params(n, n / 2, (n - 2) / 2, 1, b % 2 == 1 ? 1 : n);
  return checked_sudoku(algorithm1(p), {2, b}, "sudoku_2b");
}

SquareGrid sudoku_a_odd_b(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("block sides must be positive");
  if (b % 2 == 0) throw ParameterError("sudoku_a_odd_b needs odd b");
  if (a > b) throw ParameterError("sudoku_a_odd_b needs a <= b; transpose the (b, a) square");
  if (a == 1) return b == 1 ? trivial_square() : max_distance_square(b);
  if (a == 2) return sudoku_2b(b);

  const int n = a * b;
  int r = 0;
  if (a % 2 == 1) {
    r = (n - 1) / 2;
  } else if (a % 4 == 0) {
    r = (n - 2) / 2;
  } else {
    r = (n - 4) / 2;
  }
  const auto p = make_shift_params(n, r, (n - a) / 2, n, 1);
  return checked_sudoku(algorithm1(p), {a, b}, "sudoku_a_odd_b");
}

RowType row_type(int k, int a) {
  if (k < 1 || a < 2 || a % 2 != 0) {
    throw DomainError("row_type needs k >= 1 and even a >= 2");
  }
  if (k % 2 == 0 || k == 1) return RowType::plain;
  if (k % a == 1) return RowType::band_start;
  const int phase = k % (2 * a);
  if (phase > 1 && phase < a) return RowType::even_band_odd_row;
  return RowType::odd_band_odd_row;  // a + 1 < phase < 2a
}

int row_offset(int k, int a) {
  switch (row_type(k, a)) {
    case RowType::plain: return 0;
    case RowType::band_start: return -a / 2;
    case RowType::even_band_odd_row: return 1;
    case RowType::odd_band_odd_row: return -1;
  }
  return 0;
}

SquareGrid algorithm2(int x, int y) {
  if (x < 2) throw ParameterError("algorithm2 needs x >= 2 (use sudoku_2b for a = 2)");
  if (y < x) throw ParameterError("algorithm2 needs x <= y");
  const int a = 2 * x;
  const int n = 4 * x * y;
  const std::int64_t horizontal = 2LL * x * y - x;
  const std::int64_t vertical = 2LL * x * y;

  std::vector<std::int64_t> offset_prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    offset_prefix[k] = offset_prefix[k - 1] + row_offset(k, a);
  }

  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    const std::int64_t row_part = (i - 1) * vertical + offset_prefix[i];
    for (int j = 1; j <= n; ++j) {
      const std::int64_t col_part = (j - 1) * horizontal + (j - 1) / (4 * y);
      cells[static_cast<std::size_t>(i - 1) * n + (j - 1)] =
          static_cast<int>(wrap1(1 + row_part + col_part, n));
    }
  }
  return checked_sudoku(SquareGrid::from_cells(n, std::move(cells)), {a, 2 * y},
                        "algorithm2");
}

SquareGrid sudoku_odd_a_even_b(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("block sides must be positive");
  if (a % 2 == 0 || b % 2 == 1) {
    throw ParameterError("sudoku_odd_a_even_b needs odd a and even b");
  }
  if (a > b) throw ParameterError("sudoku_odd_a_even_b needs a <= b; transpose the (b, a) square");
  if (a == 1) return max_distance_square(b);

  const int n = a * b;
  ShiftParams p;
  if (b % 4 == 0) {
    p = b < 2 * a ? make_shift_params(n, (n - b) / 2, (n - 2) / 2, 1, n)
                  : make_shift_params(n, (n - 2) / 2, (n - 2 * a) / 2, n, 1);
  } else {
    p = b < 4 * a ? make_shift_params(n, (n - b) / 2, (n - 4) / 2, 1, n)
                  : make_shift_params(n, (n - 4) / 2, (n - 4 * a) / 2, n, 1);
  }
  return checked_sudoku(algorithm1(p), {a, b}, "sudoku_odd_a_even_b");
}

SquareGrid sudoku_square(SudokuShape shape) {
  const int a = shape.a;
  const int b = shape.b;
  if (a < 1 || b < 1) throw DomainError("block sides must be positive");
  if (a > b) return transpose(sudoku_square({b, a}));
  if (a == 1) return b == 1 ? trivial_square() : max_distance_square(b);
  if (a == 2) return sudoku_2b(b);
  if (b % 2 == 1) return sudoku_a_odd_b(a, b);
  if (a % 2 == 0) return algorithm2(a / 2, b / 2);
  return sudoku_odd_a_even_b(a, b);
}

}  // namespace innerdist
