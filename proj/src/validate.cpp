#include "innerdist/validate.hpp"

#include <algorithm>
#include <string>

#include "innerdist/errors.hpp"

namespace innerdist {

namespace {

// Tallies symbols per line and records each duplicated symbol once.
class LineChecker {
 public:
  explicit LineChecker(int n) : seen_(static_cast<std::size_t>(n) + 1, 0) {}

  void reset() { std::fill(seen_.begin(), seen_.end(), 0); }

  void add(int symbol, Violation where, ValidationReport& report) {
    if (++seen_[symbol] == 2) {
      where.symbol = symbol;
      report.violations.push_back(where);
      report.verdict = false;
    }
  }

 private:
  std::vector<int> seen_;
};

void check_rows_and_columns(const SquareGrid& g, ValidationReport& report) {
  const int n = g.order();
  LineChecker checker(n);
  for (int i = 1; i <= n; ++i) {
    checker.reset();
    for (int j = 1; j <= n; ++j) {
      checker.add(g.at(i, j), {LineKind::row, i}, report);
    }
  }
  for (int j = 1; j <= n; ++j) {
    checker.reset();
    for (int i = 1; i <= n; ++i) {
      checker.add(g.at(i, j), {LineKind::column, j}, report);
    }
  }
}

}  // namespace

std::string_view to_string(LineKind kind) {
  switch (kind) {
    case LineKind::row: return "row";
    case LineKind::column: return "column";
    case LineKind::forward_diagonal: return "forward-diagonal";
    case LineKind::back_diagonal: return "back-diagonal";
    case LineKind::block: return "block";
  }
  return "unknown";
}

ValidationReport validate_latin(const SquareGrid& g) {
  ValidationReport report;
  check_rows_and_columns(g, report);
  return report;
}

ValidationReport validate_pandiagonal(const SquareGrid& g) {
  ValidationReport report;
  check_rows_and_columns(g, report);
  const int n = g.order();
  LineChecker checker(n);
  // Forward diagonal d: cells with i - j = d (mod n).
  for (int d = 0; d < n; ++d) {
    checker.reset();
    for (int i = 1; i <= n; ++i) {
      const int j = ((i - 1 - d) % n + n) % n + 1;
      checker.add(g.at(i, j), {LineKind::forward_diagonal, d}, report);
    }
  }
  // Back diagonal d: cells with i + j = d (mod n).
  for (int d = 0; d < n; ++d) {
    checker.reset();
    for (int i = 1; i <= n; ++i) {
      const int j = ((d - i - 1) % n + 2 * n) % n + 1;
      checker.add(g.at(i, j), {LineKind::back_diagonal, d}, report);
    }
  }
  return report;
}

ValidationReport validate_sudoku(const SquareGrid& g, SudokuShape shape) {
  const int n = g.order();
  if (shape.a < 1 || shape.b < 1 || shape.order() != n) {
    throw DomainError("shape (" + std::to_string(shape.a) + "," +
                      std::to_string(shape.b) + ") does not tile order " +
                      std::to_string(n));
  }
  ValidationReport report;
  check_rows_and_columns(g, report);
  LineChecker checker(n);
  // b bands of height a, a stacks of width b.
  for (int band = 0; band < shape.b; ++band) {
    for (int stack = 0; stack < shape.a; ++stack) {
      checker.reset();
      const int index = band * shape.a + stack;
      for (int i = band * shape.a + 1; i <= (band + 1) * shape.a; ++i) {
        for (int j = stack * shape.b + 1; j <= (stack + 1) * shape.b; ++j) {
          checker.add(g.at(i, j),
                      {LineKind::block, index, BlockAddress{band, stack}},
                      report);
        }
      }
    }
  }
  return report;
}

}  // namespace innerdist
