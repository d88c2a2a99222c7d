#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "innerdist/construct.hpp"
#include "innerdist/errors.hpp"
#include "innerdist/metrics.hpp"
#include "innerdist/transform.hpp"
#include "innerdist/validate.hpp"
#include "support.hpp"

using namespace innerdist;
using innerdist::testing::fixture_grid;

namespace {

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("apply") {
  const auto g = fixture_grid("shift_9_r5_c4");
  CHECK(apply(g, GridPermutation::identity(9)) == g);

  auto swap12 = GridPermutation::identity(2);
  swap12.symbols = {2, 1};
  CHECK(apply(SquareGrid::from_rows({{1, 2}, {2, 1}}), swap12) ==
        SquareGrid::from_rows({{2, 1}, {1, 2}}));

  auto bad = GridPermutation::identity(3);
  CHECK_THROWS_AS(apply(g, bad), DomainError);
  bad = GridPermutation::identity(9);
  bad.rows[0] = 2;
  CHECK_THROWS_AS(apply(g, bad), DomainError);
}

TEST_CASE("apply preserves Latin-ness") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto g = max_distance_square(n);
      const GridPermutation p{random_permutation(n, rng), random_permutation(n, rng),
                              random_permutation(n, rng)};
      REQUIRE(validate_latin(apply(g, p)).verdict);
    }
  }
}

TEST_CASE("transpose") {
  const auto g8 = fixture_grid("sudoku_3x3");
  CHECK(transpose(transpose(g8)) == g8);
  CHECK(validate_sudoku(transpose(g8), {3, 3}).verdict);
  CHECK(inner_distance(transpose(fixture_grid("sudoku_4x4"))).inner_distance == 6);
  const auto g23 = sudoku_2b(3);
  CHECK(validate_sudoku(transpose(g23), {3, 2}).verdict);
}

TEST_CASE("circulant predicates") {
  CHECK(is_back_circulant(fixture_grid("back_circulant_5")));
  CHECK_FALSE(is_circulant(fixture_grid("back_circulant_5")));
  CHECK(is_circulant(fixture_grid("circulant_5")));
  CHECK_FALSE(is_back_circulant(fixture_grid("circulant_5")));
  CHECK_FALSE(is_circulant(fixture_grid("shift_6_r4_c2")));
  CHECK_FALSE(is_back_circulant(fixture_grid("shift_6_r4_c2")));
}

TEST_CASE("canonical circulant") {
  const auto c7 = shift_by_k(7, 1);
  const auto self = to_circulant_canonical(c7);
  CHECK(self.square == c7);
  CHECK(self.permutation == GridPermutation::identity(7));

  CHECK(to_circulant_canonical(shift_by_k(5, 2)).square ==
        to_circulant_canonical(shift_by_k(5, 3)).square);

  const auto golden = fixture_grid("shift_9_r5_c4");
  const auto canon = to_circulant_canonical(golden);
  CHECK(canon.square == shift_by_k(9, 1));
  CHECK(is_circulant(canon.square));
  CHECK(apply(golden, canon.permutation) == canon.square);

  // A Latin square that is not additive: swap two symbols in one row pair.
  const auto odd = SquareGrid::from_rows({{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 2, 1}, {4, 3, 1, 2}});
  CHECK(validate_latin(odd).verdict);
  CHECK_THROWS_AS(to_circulant_canonical(odd), DomainError);
}

TEST_CASE("shift_by_k squares share one canonical form") {
  for (int n : {5, 7, 8, 9, 11}) {
    const auto target = shift_by_k(n, 1);
    for (int k = -n; k <= n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const auto g = shift_by_k(n, k);
      const auto canon = to_circulant_canonical(g);
      REQUIRE(canon.square == target);
      REQUIRE(apply(g, canon.permutation) == target);
    }
  }
}

TEST_CASE("symbol shift preserves inner distance") {
  const auto g = fixture_grid("shift_10_r5_c4");
  for (int s = 0; s < 10; ++s) {
    auto p = GridPermutation::identity(10);
    for (int v = 1; v <= 10; ++v) p.symbols[v - 1] = (v - 1 + s) % 10 + 1;
    REQUIRE(inner_distance(apply(g, p)).inner_distance == 4);
  }
}
