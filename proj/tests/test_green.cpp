#include <doctest.h>

#include <set>

#include "diagcong/green.hpp"
#include "diagcong/monoid.hpp"
#include "test_helpers.hpp"

using namespace diagcong;

namespace {

size_t count_classes(std::vector<uint32_t> const& cls) {
  return std::set<uint32_t>(cls.begin(), cls.end()).size();
}

}  // namespace

TEST_CASE("J-classes are indexed by the available ranks") {
  for (int n = 1; n <= 3; ++n) {
    Monoid         p = enumerate(Family::P, n);
    GreenStructure g = green(p);
    CHECK(g.ranks.size() == static_cast<size_t>(n + 1));
    CHECK(count_classes(g.j) == static_cast<size_t>(n + 1));
  }
  Monoid         b4 = enumerate(Family::B, 4);
  GreenStructure g4 = green(b4);
  CHECK(g4.ranks == std::vector<int>{0, 2, 4});
  Monoid         b5 = enumerate(Family::B, 5);
  GreenStructure g5 = green(b5);
  CHECK(g5.ranks == std::vector<int>{1, 3, 5});
}

TEST_CASE("H is trivial on the planar and order-preserving families") {
  for (Family f : {Family::PP, Family::M, Family::J, Family::O}) {
    Monoid         m = enumerate(f, 3);
    GreenStructure g = green(m);
    CHECK(count_classes(g.h) == m.size());
  }
}

TEST_CASE("all relations are universal on the symmetric group") {
  Monoid         m = enumerate(Family::S, 3);
  GreenStructure g = green(m);
  CHECK(count_classes(g.r) == 1);
  CHECK(count_classes(g.l) == 1);
  CHECK(count_classes(g.h) == 1);
  CHECK(count_classes(g.j) == 1);
}

TEST_CASE("formula Green structure equals the ideal-equality oracle") {
  std::vector<std::pair<Family, int>> cells;
  for (Family f : {Family::P, Family::PB, Family::B, Family::PP, Family::M,
                   Family::J, Family::I, Family::O, Family::S}) {
    for (int n = 1; n <= 3; ++n) {
      cells.emplace_back(f, n);
    }
  }
  cells.emplace_back(Family::B, 4);
  cells.emplace_back(Family::J, 4);
  cells.emplace_back(Family::J, 5);
  cells.emplace_back(Family::O, 4);
  cells.emplace_back(Family::I, 3);
  for (auto [f, n] : cells) {
    CAPTURE(to_string(f));
    CAPTURE(n);
    Monoid         m  = enumerate(f, n);
    GreenStructure g1 = green(m);
    GreenStructure g2 = green_oracle(m);
    CHECK(g1.r == g2.r);
    CHECK(g1.l == g2.l);
    CHECK(g1.h == g2.h);
    CHECK(g1.j == g2.j);
    CHECK(g2.j == g2.d);
  }
  Monoid         one = enumerate(Family::J, 1);
  GreenStructure g   = green_oracle(one);
  CHECK(one.size() == 1);
  CHECK(g.r == std::vector<uint32_t>{0});
}

TEST_CASE("every J-class contains an idempotent") {
  for (Family f : {Family::P, Family::PB, Family::B, Family::PP, Family::M,
                   Family::J, Family::I, Family::O}) {
    Monoid m = enumerate(f, 3);
    std::set<int> ranks_with_idempotent;
    for (elem_id e : idempotents(m)) {
      ranks_with_idempotent.insert(m.rank_of(e));
    }
    CHECK(ranks_with_idempotent.size() == green(m).ranks.size());
    CHECK(ranks_with_idempotent.count(m.rank_of(m.identity_id())) == 1);
  }
}

TEST_CASE("identity is an idempotent projection") {
  Monoid m  = enumerate(Family::B, 3);
  auto   es = idempotents(m);
  auto   ps = projections(m);
  CHECK(std::count(es.begin(), es.end(), m.identity_id()) == 1);
  CHECK(std::count(ps.begin(), ps.end(), m.identity_id()) == 1);
  for (elem_id p : ps) {
    CHECK(std::count(es.begin(), es.end(), p) == 1);
  }
}

TEST_CASE("rank-q projections of the Jones monoid are counted by the "
          "ballot formula") {
  Monoid m = enumerate(Family::J, 5);
  size_t rank3 = 0;
  for (elem_id p : projections(m)) {
    rank3 += m.rank_of(p) == 3;
  }
  CHECK(rank3 == (3 + 1) * test::binom(6, 1) / (5 + 1));
}

TEST_CASE("maximal subgroups") {
  Monoid p3 = enumerate(Family::P, 3);
  for (int q = 0; q <= 3; ++q) {
    auto g = maximal_subgroup(p3, q);
    CHECK(g.ids.size() == test::factorial(q));
    // The permutation reading is an isomorphism.
    for (size_t i = 0; i < g.ids.size(); ++i) {
      for (size_t j = 0; j < g.ids.size(); ++j) {
        elem_id prod = p3.product(g.ids[i], g.ids[j]);
        auto    it   = std::find(g.ids.begin(), g.ids.end(), prod);
        REQUIRE(it != g.ids.end());
        CHECK(g.perms[it - g.ids.begin()] == g.perms[i] * g.perms[j]);
      }
    }
  }
  // Group of units of P_3 is S_3.
  CHECK(maximal_subgroup(p3, 3).ids.size() == 6);

  Monoid j5 = enumerate(Family::J, 5);
  for (int q : {1, 3, 5}) {
    CHECK(maximal_subgroup(j5, q).ids.size() == 1);
  }
  Monoid b4 = enumerate(Family::B, 4);
  CHECK(maximal_subgroup(b4, 2).ids.size() == 2);
  CHECK_THROWS_AS(maximal_subgroup(b4, 1), std::invalid_argument);
}

TEST_CASE("stability holds in every enumerated monoid") {
  CHECK(check_stability(enumerate(Family::P, 3)));
  CHECK(check_stability(enumerate(Family::B, 4)));
  CHECK(check_stability(enumerate(Family::J, 5)));
}

TEST_CASE("minimal ideals") {
  auto b5 = check_minimal_ideal(enumerate(Family::B, 5));
  CHECK(b5.rank == 1);
  CHECK(b5.is_rectangular_band);

  auto p3 = check_minimal_ideal(enumerate(Family::P, 3));
  CHECK(p3.rank == 0);
  CHECK(p3.is_rectangular_band);
  CHECK(p3.size == 25);

  auto i3 = check_minimal_ideal(enumerate(Family::I, 3));
  CHECK(i3.rank == 0);
  CHECK(i3.size == 1);

  // Ideals form a chain and are closed under two-sided multiplication.
  Monoid m = enumerate(Family::B, 4);
  for (int q : {0, 2, 4}) {
    auto ids = ideal(m, q);
    std::set<elem_id> members(ids.begin(), ids.end());
    for (elem_id x : ids) {
      for (elem_id a = 0; a < m.size(); ++a) {
        CHECK(members.count(m.product(a, x)) == 1);
        CHECK(members.count(m.product(x, a)) == 1);
      }
    }
  }
}
