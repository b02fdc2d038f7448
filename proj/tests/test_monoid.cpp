#include <doctest.h>

#include <set>

#include "diagcong/green.hpp"
#include "diagcong/maps.hpp"
#include "diagcong/monoid.hpp"
#include "test_helpers.hpp"

using namespace diagcong;

TEST_CASE("element counts match the closed-form sequences") {
  CHECK(enumerate(Family::P, 1).size() == 2);
  for (int n = 1; n <= 3; ++n) {
    CHECK(enumerate(Family::P, n).size() == test::bell(2 * n));
    CHECK(enumerate(Family::PB, n).size() == test::involutions(2 * n));
    CHECK(enumerate(Family::PP, n).size() == test::catalan(2 * n));
    CHECK(enumerate(Family::M, n).size()
          == test::noncrossing_partial_matchings(2 * n));
    CHECK(enumerate(Family::I, n).size() == test::pperm_count(n));
    CHECK(enumerate(Family::O, n).size() == test::binom(2 * n, n));
    CHECK(enumerate(Family::S, n).size() == test::factorial(n));
  }
  CHECK(enumerate(Family::P, 3).size() == 203);
  CHECK(enumerate(Family::B, 4).size() == 105);
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate(Family::B, n).size() == test::double_factorial_odd(n));
    CHECK(enumerate(Family::J, n).size() == test::catalan(n));
  }
  CHECK(enumerate(Family::J, 5).size() == 42);
  CHECK(enumerate(Family::I, 3).size() == 34);
  CHECK(enumerate(Family::O, 3).size() == 20);

  Monoid s4 = enumerate(Family::S, 4);
  CHECK(s4.size() == 24);
  for (elem_id i = 0; i < s4.size(); ++i) {
    CHECK(s4.rank_of(i) == 4);
  }
}

TEST_CASE("the size guard refuses oversized enumerations by name") {
  CHECK_THROWS_WITH_AS(enumerate(Family::P, 3, 100),
                       doctest::Contains("size guard of 100"),
                       std::length_error);
  CHECK_THROWS_AS(enumerate(Family::P, 6), std::length_error);
  CHECK_THROWS_AS(enumerate(Family::M, 2, 5), std::length_error);
}

TEST_CASE("identity laws hold in every enumerated monoid") {
  for (Family f : {Family::P, Family::PB, Family::B, Family::PP, Family::M,
                   Family::J, Family::I, Family::O, Family::S}) {
    for (int n = 1; n <= 3; ++n) {
      Monoid  m  = enumerate(f, n);
      elem_id e  = m.identity_id();
      CHECK(m.at(e) == Diagram::identity(n));
      for (elem_id i = 0; i < m.size(); ++i) {
        CHECK(m.product(e, i) == i);
        CHECK(m.product(i, e) == i);
      }
    }
  }
}

TEST_CASE("element order and products are deterministic") {
  Monoid a = enumerate(Family::B, 3);
  Monoid b = enumerate(Family::B, 3);
  REQUIRE(a.size() == b.size());
  for (elem_id i = 0; i < a.size(); ++i) {
    CHECK(a.at(i) == b.at(i));
  }
}

TEST_CASE("products work without a Cayley table") {
  Monoid with    = enumerate(Family::I, 3);
  Monoid without = enumerate(Family::I, 3, 1'000'000, 0);
  CHECK(with.has_table());
  CHECK_FALSE(without.has_table());
  for (elem_id x = 0; x < with.size(); ++x) {
    for (elem_id y = 0; y < with.size(); ++y) {
      CHECK(with.product(x, y) == without.product(x, y));
    }
  }
}

TEST_CASE("canonical idempotents and embedded permutations") {
  CHECK(canonical_idempotent(Family::P, 3, 2)
        == Diagram::parse("P3 [{1,-1},{2,-2},{3},{-3}]"));
  CHECK(canonical_idempotent(Family::B, 4, 2)
        == Diagram::parse("P4 [{1,-1},{2,-2},{3,4},{-3,-4}]"));
  CHECK_THROWS_AS(canonical_idempotent(Family::B, 4, 1),
                  std::invalid_argument);

  Permutation cyc({2, 3, 1});
  CHECK(sigma_bar(Family::I, 5, cyc)
        == Diagram::parse("P5 [{1,-2},{2,-3},{3,-1},{4},{5},{-4},{-5}]"));
  CHECK(sigma_bar(Family::J, 5, Permutation::identity(3))
        == canonical_idempotent(Family::J, 5, 3));
}

TEST_CASE("corner sandwich of the Jones monoid has Catalan size") {
  // eps_q J_n eps_q is isomorphic to J_q.
  for (auto [n, q] : {std::pair{5, 3}, std::pair{7, 5}}) {
    Monoid  m   = enumerate(Family::J, n);
    elem_id eps = m.id_of(canonical_idempotent(Family::J, n, q));
    std::set<elem_id> corner;
    for (elem_id x = 0; x < m.size(); ++x) {
      corner.insert(m.product(m.product(eps, x), eps));
    }
    CHECK(corner.size() == test::catalan(q));
  }
}
