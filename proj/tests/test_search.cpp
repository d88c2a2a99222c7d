#include <doctest.h>

#include <algorithm>

#include "innerdist/errors.hpp"
#include "innerdist/metrics.hpp"
#include "innerdist/search.hpp"
#include "innerdist/validate.hpp"
#include "support.hpp"

using namespace innerdist;

namespace {

SearchResult search(SquareClass target, int d, SearchMode mode = SearchMode::count,
                    unsigned workers = 1) {
  SearchQuery q;
  q.target = target;
  q.min_distance = d;
  q.mode = mode;
  q.workers = workers;
  return run_search(q);
}

}  // namespace

TEST_CASE("small plain counts") {
  CHECK(search(SquareClass::plain(3), 1).count == 12);
  CHECK(search(SquareClass::plain(5), 2).count == 20);
  CHECK(search(SquareClass::plain(4), 2).count == 0);
  CHECK(search(SquareClass::plain(4), 0).count == 576);
  CHECK(search(SquareClass::plain(4), 1).count == 576);
  CHECK(search(SquareClass::plain(1), 1).count == 1);
  CHECK(search(SquareClass::plain(2), 1).count == 2);
  CHECK(search(SquareClass::plain(2), 2).count == 0);
  const auto r = search(SquareClass::plain(7), 3);
  CHECK(r.count == 28);
  CHECK(r.complete);
}

TEST_CASE("constrained counts") {
  CHECK(search(SquareClass::pandiagonal(5), 2).count == 0);
  CHECK(search(SquareClass::pandiagonal(5), 1).count > 0);
  CHECK(search(SquareClass::pandiagonal(4), 0).count == 0);
  CHECK(search(SquareClass::sudoku({3, 3}), 4).count == 0);
  CHECK(search(SquareClass::sudoku({2, 2}), 2).count == 0);
  CHECK(search(SquareClass::sudoku({2, 2}), 0).count == 288);
}

TEST_CASE("search agrees with filtering every Latin square") {
  for (int n : {1, 2, 3, 4}) {
    const auto all = innerdist::testing::oracle_all_latin_squares(n);
    for (int d = 0; d <= n / 2 + 1; ++d) {
      std::uint64_t expected = 0;
      std::uint64_t expected_pan = 0;
      for (const auto& g : all) {
        const bool far = n < 2 || innerdist::testing::oracle_inner_distance(g) >= d;
        if (far) ++expected;
        if (far && innerdist::testing::oracle_is_pandiagonal(g)) ++expected_pan;
      }
      REQUIRE(search(SquareClass::plain(n), d).count == expected);
      REQUIRE(search(SquareClass::pandiagonal(n), d).count == expected_pan);
    }
  }
}

TEST_CASE("enumerate returns sorted valid witnesses") {
  const auto r = search(SquareClass::plain(5), 2, SearchMode::enumerate);
  REQUIRE(r.witnesses.size() == 20);
  CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
  for (const auto& w : r.witnesses) {
    CHECK(validate_latin(w).verdict);
    CHECK(inner_distance(w).inner_distance >= 2);
  }
  const auto s = search(SquareClass::sudoku({2, 3}), 2, SearchMode::enumerate);
  CHECK(s.count == s.witnesses.size());
  for (const auto& w : s.witnesses) {
    CHECK(validate_sudoku(w, {2, 3}).verdict);
    CHECK(inner_distance(w).inner_distance >= 2);
  }
  const auto p = search(SquareClass::pandiagonal(7), 2, SearchMode::enumerate);
  CHECK(p.count > 0);
  for (const auto& w : p.witnesses) CHECK(validate_pandiagonal(w).verdict);
}

TEST_CASE("witness limit keeps the exact count") {
  SearchQuery q;
  q.target = SquareClass::plain(5);
  q.min_distance = 2;
  q.mode = SearchMode::enumerate;
  q.witness_limit = 3;
  const auto r = run_search(q);
  CHECK(r.count == 20);
  CHECK(r.witnesses.size() == 3);
}

TEST_CASE("exists mode") {
  const auto yes = search(SquareClass::plain(7), 3, SearchMode::exists);
  CHECK(yes.count == 1);
  REQUIRE(yes.witnesses.size() == 1);
  CHECK(inner_distance(yes.witnesses[0]).inner_distance >= 3);
  const auto no = search(SquareClass::sudoku({3, 3}), 4, SearchMode::exists);
  CHECK(no.count == 0);
  CHECK(no.complete);
}

TEST_CASE("count is monotone in d") {
  for (int n = 3; n <= 8; ++n) {
    const int first = n <= 5 ? 0 : n / 2 - 1;
    std::uint64_t previous = search(SquareClass::plain(n), first).count;
    for (int d = first + 1; d <= n / 2 + 1; ++d) {
      const auto current = search(SquareClass::plain(n), d).count;
      REQUIRE(current <= previous);
      previous = current;
    }
  }
}

TEST_CASE("fixing the first cell divides the maximal count by n") {
  for (int n : {5, 7}) {
    SearchQuery q;
    q.target = SquareClass::plain(n);
    q.min_distance = (n - 1) / 2;
    const auto full = run_search(q);
    q.symmetry = Symmetry::fix_first_cell;
    const auto fixed = run_search(q);
    CHECK(fixed.count * n == full.count);
  }
}

TEST_CASE("results do not depend on the worker count") {
  struct Case {
    SquareClass target;
    int d;
  };
  const std::vector<Case> cases{{SquareClass::plain(5), 2},
                                {SquareClass::plain(5), 1},
                                {SquareClass::pandiagonal(7), 2},
                                {SquareClass::sudoku({2, 3}), 2},
                                {SquareClass::plain(7), 3}};
  for (const auto& c : cases) {
    const auto one = search(c.target, c.d, SearchMode::enumerate, 1);
    for (unsigned w : {2u, 3u, 8u}) {
      const auto many = search(c.target, c.d, SearchMode::enumerate, w);
      REQUIRE(many.count == one.count);
      REQUIRE(many.complete == one.complete);
      REQUIRE(many.witnesses == one.witnesses);
      const auto first = search(c.target, c.d, SearchMode::exists, w);
      const auto first_one = search(c.target, c.d, SearchMode::exists, 1);
      REQUIRE(first.witnesses == first_one.witnesses);
    }
  }
}

TEST_CASE("budget exhaustion is reported") {
  SearchQuery q;
  q.target = SquareClass::plain(6);
  q.min_distance = 1;
  q.node_budget = 500;
  const auto r = run_search(q);
  CHECK_FALSE(r.complete);
  CHECK(r.nodes_expanded >= 500);
  q.workers = 4;
  CHECK_FALSE(run_search(q).complete);
}

TEST_CASE("invalid queries") {
  SearchQuery q;
  q.target = SquareClass::plain(65);
  CHECK_THROWS_AS(run_search(q), DomainError);
  q.target = SquareClass{SquareKind::sudoku, 9, {2, 3}};
  CHECK_THROWS_AS(run_search(q), DomainError);
  q.target = SquareClass::plain(4);
  q.min_distance = -1;
  CHECK_THROWS_AS(run_search(q), DomainError);
}

TEST_CASE("max_distance_via_search") {
  CHECK(max_distance_via_search(SquareClass::plain(6)).max_distance == 2);
  CHECK(max_distance_via_search(SquareClass::plain(5)).max_distance == 2);
  CHECK(max_distance_via_search(SquareClass::pandiagonal(7)).max_distance == 2);
  CHECK(max_distance_via_search(SquareClass::sudoku({2, 2})).max_distance == 1);
  const auto none = max_distance_via_search(SquareClass::pandiagonal(4));
  CHECK_FALSE(none.max_distance.has_value());
  CHECK(none.complete);
  const auto starved = max_distance_via_search(SquareClass::plain(8), 10);
  CHECK_FALSE(starved.complete);
  CHECK_FALSE(starved.max_distance.has_value());
  CHECK(starved.upper == 4);
  CHECK_THROWS_AS(max_distance_via_search(SquareClass::plain(1)), DomainError);
}
