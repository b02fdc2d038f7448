#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "diagcong/catalog.hpp"
#include "diagcong/congruence.hpp"
#include "diagcong/green.hpp"
#include "diagcong/maps.hpp"
#include "diagcong/monoid.hpp"

using namespace diagcong;

TEST_CASE("Rees congruences") {
  Monoid m = enumerate(Family::P, 3);
  CHECK(rees(m, 3) == Congruence::universal(m));
  auto r0 = rees(m, 0);
  CHECK(r0.num_classes() == 1 + m.size() - ideal(m, 0).size());
  CHECK_THROWS_AS(rees(m, 4), std::invalid_argument);
  CHECK_THROWS_AS(rees(enumerate(Family::B, 4), 1), std::invalid_argument);

  // R_1 on P_3 equals the closure of any pair in R_1 minus its lower cover
  // layers.
  auto r1   = rees(m, 1);
  auto lam1 = realize_label(m, {CongruenceLabel::Lam, "1"});
  auto rho1 = realize_label(m, {CongruenceLabel::Rho, "1"});
  int  checked = 0;
  for (elem_id x = 0; x < m.size() && checked < 25; ++x) {
    for (elem_id y = x + 1; y < m.size() && checked < 25; ++y) {
      if (r1.related(x, y) && !r0.related(x, y) && !lam1.related(x, y)
          && !rho1.related(x, y)) {
        CHECK(principal_congruence(m, x, y) == r1);
        ++checked;
      }
    }
  }
  CHECK(checked == 25);
}

TEST_CASE("retractions exist exactly where the theory says") {
  Monoid p3 = enumerate(Family::P, 3);
  auto   f  = retraction(p3, 1);
  REQUIRE(f.has_value());
  for (elem_id x : ideal(p3, 1)) {
    CHECK(p3.at(f->image[x]) == hat_partition(p3.at(x)));
  }
  CHECK_FALSE(retraction(p3, 2).has_value());
  CHECK_FALSE(retraction(p3, 3).has_value());

  Monoid b4 = enumerate(Family::B, 4);
  auto   g  = retraction(b4, 2);
  REQUIRE(g.has_value());
  for (elem_id x : ideal(b4, 2)) {
    CHECK(b4.at(g->image[x]) == hat_brauer(b4.at(x)));
  }
  CHECK_FALSE(retraction(b4, 4).has_value());

  // Identity retraction on the minimal ideal itself.
  auto h = retraction(b4, 0);
  REQUIRE(h.has_value());
  for (elem_id x : ideal(b4, 0)) {
    CHECK(h->image[x] == x);
  }

  // In the symmetric inverse monoid every ideal retracts onto the zero.
  Monoid i3 = enumerate(Family::I, 3);
  for (int q = 0; q <= 3; ++q) {
    CHECK(retraction(i3, q).has_value());
  }
}

TEST_CASE("nu for the trivial and symmetric subgroups") {
  Monoid m  = enumerate(Family::P, 3);
  auto   jq = j_class(m, 2);
  auto   nu = nu_fast(m, {2, NSKind::Trivial});
  CHECK(nu.size() == jq.size());
  for (auto const& [x, y] : nu) {
    CHECK(x == y);
  }
  // Symmetric: all H-related pairs of the J-class.
  auto           full = nu_fast(m, {2, NSKind::Symmetric});
  GreenStructure g    = green(m);
  size_t         expected = 0;
  for (elem_id x : jq) {
    for (elem_id y : jq) {
      if (x <= y && g.h[x] == g.h[y]) {
        ++expected;
      }
    }
  }
  CHECK(full.size() == expected);
  CHECK_THROWS_AS(nu_fast(enumerate(Family::J, 4), {2, NSKind::Symmetric}),
                  std::invalid_argument);
  CHECK_THROWS_AS(nu_fast(m, {1, NSKind::Symmetric}), std::invalid_argument);
  CHECK_THROWS_AS(nu_fast(m, {3, NSKind::Klein}), std::invalid_argument);
}

TEST_CASE("nu fast path equals the sandwich oracle on P_3 at rank 2") {
  Monoid m = enumerate(Family::P, 3);
  CHECK(nu_fast(m, {2, NSKind::Symmetric})
        == nu_oracle(m, {2, NSKind::Symmetric}));
  CHECK(nu_fast(m, {2, NSKind::Trivial})
        == nu_oracle(m, {2, NSKind::Trivial}));
}

TEST_CASE("IN-pair validation") {
  Monoid m = enumerate(Family::P, 3);
  CHECK_THROWS_AS(make_in_pair(m, 0, {2, NSKind::Symmetric}, "bad"),
                  std::invalid_argument);
  INPair c1 = make_in_pair(m, 1, {2, NSKind::Symmetric}, "S_2");
  CHECK(c1.retractable);
  INPair c2 = make_in_pair(m, 2, {3, NSKind::Alternating}, "A_3");
  CHECK_FALSE(c2.retractable);

  Monoid j4 = enumerate(Family::J, 4);
  CHECK_THROWS_AS(make_in_pair(j4, 0, {2, NSKind::Symmetric}, "x"),
                  std::invalid_argument);
}

TEST_CASE("IN-pair congruences and their explicit forms") {
  Monoid m     = enumerate(Family::P, 3);
  auto   pairs = retractable_in_pairs(m);
  REQUIRE(pairs.size() == 3);

  auto c0 = in_pair_congruences(m, pairs[0], true);
  // lam_0 = Delta plus rank-0 pairs with equal cokernels.
  for (elem_id x = 0; x < m.size(); ++x) {
    for (elem_id y = 0; y < m.size(); ++y) {
      bool expected = x == y
                      || (m.rank_of(x) == 0 && m.rank_of(y) == 0
                          && stats(m.at(x)).coker == stats(m.at(y)).coker);
      CHECK(c0.lam->related(x, y) == expected);
    }
  }
  for (auto const& pair : pairs) {
    auto c = in_pair_congruences(m, pair, true);
    for (Congruence const* q : {&c.r, &*c.lam, &*c.rho, &*c.mu, &*c.eta}) {
      CHECK(verify_congruence(m, q->classes()));
    }
    CHECK(*c.mu == *c.eta);  // H-trivial minimal ideal
    if (pair.nsub.kind == NSKind::Trivial) {
      CHECK(c.r == rees(m, pair.ideal_rank));
    }
  }
  CHECK_THROWS_AS(
      in_pair_congruences(m, make_in_pair(m, 2, {3, NSKind::Alternating}, "x"),
                          true),
      std::invalid_argument);
}

TEST_CASE("mu_K on B_4 is mu_2 joined with the Klein nu") {
  Monoid m     = enumerate(Family::B, 4);
  auto   pairs = retractable_in_pairs(m);
  REQUIRE(pairs.size() == 4);
  auto ck = in_pair_congruences(m, pairs[3], true);
  auto c2 = in_pair_congruences(m, pairs[2], true);
  for (Congruence const* q :
       {&ck.r, &*ck.lam, &*ck.rho, &*ck.mu, &*ck.eta}) {
    CHECK(verify_congruence(m, q->classes()));
  }
  auto nu = nu_fast(m, {4, NSKind::Klein});
  // mu_K = mu_2 u nu_K as relations:
  for (elem_id x = 0; x < m.size(); ++x) {
    for (elem_id y = 0; y < m.size(); ++y) {
      bool in_nu = false;
      if (m.rank_of(x) == 4 && m.rank_of(y) == 4) {
        auto p = std::minmax(x, y);
        in_nu  = std::binary_search(nu.begin(), nu.end(),
                                    std::make_pair(p.first, p.second));
      }
      CHECK(ck.mu->related(x, y) == (c2.mu->related(x, y) || in_nu));
    }
  }
}

TEST_CASE("liftable congruences on the minimal ideal") {
  Monoid m       = enumerate(Family::P, 3);
  auto   min_ids = ideal(m, 0);
  GreenStructure g = green(m);

  std::vector<uint32_t> delta(min_ids.size());
  std::iota(delta.begin(), delta.end(), 0);
  CHECK(liftable_check(m, min_ids, delta));
  CHECK(liftable_check(m, min_ids, std::vector<uint32_t>(min_ids.size(), 0)));

  for (auto const* rel : {&g.l, &g.r, &g.h}) {
    std::vector<uint32_t> cls;
    for (elem_id x : min_ids) {
      cls.push_back((*rel)[x]);
    }
    CHECK(liftable_check(m, min_ids, cls));
  }

  // A partition that is not L-closed fails.
  Monoid p2      = enumerate(Family::P, 2);
  auto   min2    = ideal(p2, 0);
  std::vector<uint32_t> bad(min2.size());
  std::iota(bad.begin(), bad.end(), 0);
  bad[1] = bad[0];
  CHECK_FALSE(liftable_check(p2, min2, bad));
}

TEST_CASE("predicted lattice node counts") {
  struct Cell {
    Family f;
    int    n;
    size_t nodes;
  };
  for (auto [f, n, nodes] : std::vector<Cell>{{Family::O, 3, 4},
                                              {Family::I, 3, 7},
                                              {Family::B, 3, 7},
                                              {Family::J, 4, 9},
                                              {Family::J, 5, 6},
                                              {Family::P, 3, 16},
                                              {Family::PP, 2, 9},
                                              {Family::B, 4, 19}}) {
    Monoid m = enumerate(f, n);
    CHECK(predicted_lattice(m).lattice.congruences.size() == nodes);
  }
  CHECK_THROWS_AS(check_classification_range(Family::B, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_classification_range(Family::P, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_classification_range(Family::S, 3), std::invalid_argument);
  CHECK_THROWS_AS(predicted_lattice(enumerate(Family::J, 2)),
                  std::invalid_argument);
}

TEST_CASE("the symbolic lattice agrees with the concrete one") {
  std::vector<std::pair<Family, int>> cells = {
      {Family::P, 2},  {Family::P, 3},  {Family::PB, 2}, {Family::PB, 3},
      {Family::PP, 2}, {Family::PP, 3}, {Family::M, 2},  {Family::M, 3},
      {Family::B, 3},  {Family::B, 4},  {Family::J, 3},  {Family::J, 4},
      {Family::J, 5},  {Family::J, 6},  {Family::I, 2},  {Family::I, 3},
      {Family::I, 4},  {Family::O, 2},  {Family::O, 3}};
  for (auto [f, n] : cells) {
    CAPTURE(to_string(f));
    CAPTURE(n);
    Monoid          m    = enumerate(f, n);
    LabeledLattice  conc = predicted_lattice(m);
    SymbolicLattice sym  = predicted_lattice_symbolic(f, n);
    REQUIRE(sym.nodes.size() == conc.names.size());
    auto name_set = [](std::vector<std::vector<CongruenceLabel>> const& ns) {
      std::set<std::string> out;
      for (auto const& labels : ns) {
        std::string s;
        for (auto const& l : labels) {
          s += l.str() + "|";
        }
        out.insert(s);
      }
      return out;
    };
    CHECK(name_set(sym.nodes) == name_set(conc.names));
    std::set<std::pair<std::string, std::string>> sym_edges, conc_edges;
    for (auto const& [i, j] : sym.hasse) {
      sym_edges.emplace(sym.name(i), sym.name(j));
    }
    for (auto const& [i, j] : conc.lattice.hasse) {
      conc_edges.emplace(conc.name(i), conc.name(j));
    }
    CHECK(sym_edges == conc_edges);
  }
  // Out-of-guard symbolic structure is still available: 13 Rees nodes, 22
  // subgroup nodes (1 + 2 + 3 + 8 * 2), 9 prism nodes; Delta and Nabla merge.
  SymbolicLattice big = predicted_lattice_symbolic(Family::P, 12);
  CHECK(big.nodes.size() == 44);
}

TEST_CASE("classification tables on explicit pairs") {
  CHECK(classify_pair(Family::P, 2, Diagram::identity(2),
                      Diagram::identity(2))
            .str()
        == "Delta");
  CHECK(classify_pair(Family::P, 2, Diagram::parse("P2 [{1,2,-1,-2}]"),
                      Diagram::parse("P2 [{1,2},{-1,-2}]"))
            .str()
        == "mu(1)");
  // Rank-2 H-related distinct pair in P_3.
  CHECK(classify_pair(Family::P, 3, Diagram::identity(3) /* placeholder */,
                      Diagram::identity(3))
            .str()
        == "Delta");
  Diagram a = Diagram::parse("P3 [{1,-1},{2,-2},{3},{-3}]");
  Diagram b = Diagram::parse("P3 [{1,-2},{2,-1},{3},{-3}]");
  CHECK(classify_pair(Family::P, 3, a, b).str() == "mu(S_2)");
  // Rank-3 H-related pairs in P_3 generate the subgroup congruences.
  Diagram cyc = Diagram::parse("P3 [{1,-2},{2,-3},{3,-1}]");
  Diagram swr = Diagram::parse("P3 [{1,-2},{2,-1},{3,-3}]");
  CHECK(classify_pair(Family::P, 3, Diagram::identity(3), cyc).str()
        == "R(A_3)");
  CHECK(classify_pair(Family::P, 3, Diagram::identity(3), swr).str()
        == "R(S_3)");
  // Klein pair in B_4: units with phi a double transposition.
  Diagram dbl = Diagram::parse("P4 [{1,-2},{2,-1},{3,-4},{4,-3}]");
  CHECK(classify_pair(Family::B, 4, Diagram::identity(4), dbl).str()
        == "mu(K)");
  Diagram swap4 = Diagram::parse("P4 [{1,-2},{2,-1},{3,-3},{4,-4}]");
  CHECK(classify_pair(Family::B, 4, Diagram::identity(4), swap4).str()
        == "R(S_4)");
  CHECK_THROWS_AS(
      classify_pair(Family::B, 3, Diagram::identity(3),
                    Diagram::parse("P3 [{1},{2},{3},{-1},{-2},{-3}]")),
      std::invalid_argument);
}

TEST_CASE("classifier agrees with closure on all pairs of small cells") {
  for (auto [f, n] : {std::pair{Family::P, 2}, std::pair{Family::PP, 2},
                      std::pair{Family::B, 3}, std::pair{Family::J, 3},
                      std::pair{Family::M, 2}, std::pair{Family::I, 2},
                      std::pair{Family::O, 3}}) {
    CAPTURE(to_string(f));
    Monoid m = enumerate(f, n);
    std::map<std::string, Congruence> by_label;
    for (elem_id x = 0; x < m.size(); ++x) {
      for (elem_id y = x + 1; y < m.size(); ++y) {
        CongruenceLabel label = classify_pair(f, n, m.at(x), m.at(y));
        auto it = by_label.find(label.str());
        if (it == by_label.end()) {
          it = by_label.emplace(label.str(), realize_label(m, label)).first;
        }
        CHECK(principal_congruence(m, x, y) == it->second);
      }
    }
  }
}

TEST_CASE("predicted star lists exclude exactly the lam and rho nodes") {
  Monoid m    = enumerate(Family::P, 3);
  auto   pred = predicted_lattice(m);
  size_t starred = 0;
  for (size_t i = 0; i < pred.names.size(); ++i) {
    bool s = predicted_star_compatible(pred.names[i]);
    starred += s;
    CHECK(is_star_congruence(pred.lattice.congruences[i]) == s);
  }
  CHECK(starred == 10);
}
