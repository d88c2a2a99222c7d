#include "innerdist/bounds.hpp"

#include <algorithm>

#include "innerdist/errors.hpp"

namespace innerdist {

namespace {

BoundsEntry undefined_order_one() {
  return BoundsEntry{0, 0, false, true, {"order 1: inner distance undefined"}};
}

BoundsEntry plain_bounds(int n) {
  if (n == 1) return undefined_order_one();
  if (n == 2) return BoundsEntry{1, 1, true, true, {"order 2: both squares have distance 1"}};
  const int best = (n - 1) / 2;
  return BoundsEntry{best, best, true, true,
                     {"upper: interior cell has two distinct row neighbours",
                      "lower: shift fill with r = c = floor((n-1)/2)"}};
}

BoundsEntry sudoku_bounds(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 1) {
    auto entry = plain_bounds(b);
    entry.provenance.insert(entry.provenance.begin(), "(1,b)-Sudoku is plain Latin");
    return entry;
  }
  const int n = a * b;
  if (a == 2) {
    return BoundsEntry{b - 1, b - 1, true, true,
                       {"upper: plain bound floor((n-1)/2) = b-1",
                        "lower: two-row block shift construction"}};
  }

  BoundsEntry entry;
  entry.upper = (n - 3) / 2;
  entry.provenance.push_back("upper: 3x3 window inside a block, floor((n-3)/2)");
  if (a % 2 == 1 && b % 2 == 1 && a >= 5) {
    entry.upper = (n - 5) / 2;
    entry.provenance.push_back("upper: 5x5 window inside a block (odd a,b >= 5), (n-5)/2");
  }

  if (b % 2 == 1) {
    entry.lower = (n - a) / 2;
    entry.provenance.push_back("lower: odd-b shift construction, (n-a)/2");
  } else if (a % 2 == 0) {
    entry.lower = (n - a) / 2;
    entry.provenance.push_back("lower: even-even row-offset construction, (n-a)/2");
  } else if (b % 4 == 0) {
    entry.lower = (n - std::min(2 * a, b)) / 2;
    entry.provenance.push_back("lower: odd-a, 4|b shift construction, (n-min(2a,b))/2");
  } else {
    entry.lower = (n - std::min(4 * a, b)) / 2;
    entry.provenance.push_back("lower: odd-a, b=2 mod 4 shift construction, (n-min(4a,b))/2");
  }
  entry.exact = entry.lower == entry.upper;
  return entry;
}

}  // namespace

std::string to_string(SquareKind kind) {
  switch (kind) {
    case SquareKind::plain: return "plain";
    case SquareKind::pandiagonal: return "pandiagonal";
    case SquareKind::sudoku: return "sudoku";
  }
  return "unknown";
}

SquareKind parse_square_kind(const std::string& text) {
  if (text == "plain" || text == "latin") return SquareKind::plain;
  if (text == "pandiagonal") return SquareKind::pandiagonal;
  if (text == "sudoku") return SquareKind::sudoku;
  throw DomainError("unknown kind '" + text + "'");
}

BoundsEntry known_bounds(const SquareClass& cls) {
  switch (cls.kind) {
    case SquareKind::plain:
      if (cls.n < 1) throw DomainError("order must be positive");
      return plain_bounds(cls.n);
    case SquareKind::pandiagonal: {
      const int n = cls.n;
      if (n < 1) throw DomainError("order must be positive");
      if (n % 6 != 1 && n % 6 != 5) {
        return BoundsEntry{0, 0, false, false,
                           {"pandiagonal squares exist only for n = 1, 5 (mod 6)"}};
      }
      if (n == 1) return undefined_order_one();
      const int best = (n - 3) / 2;
      return BoundsEntry{best, best, true, true,
                         {"upper: distance (n-1)/2 forces a circulant with a constant diagonal",
                          "lower: shift fill with steps -(n-3)/2 and (n-1)/2"}};
    }
    case SquareKind::sudoku:
      if (cls.shape.a < 1 || cls.shape.b < 1) {
        throw DomainError("block sides must be positive");
      }
      return sudoku_bounds(cls.shape.a, cls.shape.b);
  }
  throw DomainError("unknown square kind");
}

}  // namespace innerdist
