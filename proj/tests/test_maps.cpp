#include <doctest.h>

#include "diagcong/family.hpp"
#include "diagcong/green.hpp"
#include "diagcong/maps.hpp"
#include "diagcong/monoid.hpp"

using namespace diagcong;

TEST_CASE("permutation basics") {
  Permutation id = Permutation::identity(4);
  CHECK(id.is_identity());
  CHECK(id.is_even());
  CHECK(id.is_klein());
  Permutation swap12({2, 1, 3, 4});
  CHECK_FALSE(swap12.is_even());
  CHECK_FALSE(swap12.is_klein());
  Permutation dbl({2, 1, 4, 3});
  CHECK(dbl.is_even());
  CHECK(dbl.is_klein());
  Permutation cyc({2, 3, 1});
  CHECK(cyc.is_even());
  CHECK((cyc * cyc.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("hat splits transversals and fixes rank-0 diagrams") {
  Diagram alpha =
      Diagram::parse("P6 [{1,4},{2,3,-4,-5},{5,6},{-1,-2,-6},{-3}]");
  CHECK(hat_partition(alpha)
        == Diagram::parse("P6 [{1,4},{2,3},{5,6},{-1,-2,-6},{-3},{-4,-5}]"));
  Diagram rank0 = hat_partition(alpha);
  CHECK(hat_partition(rank0) == rank0);

  DiagramStats sa = stats(alpha), sh = stats(hat_partition(alpha));
  CHECK(sh.rank == 0);
  CHECK(sa.ker == sh.ker);
  CHECK(sa.coker == sh.coker);
}

TEST_CASE("hat is a homomorphism on the rank <= 1 ideal of P_3") {
  Monoid m   = enumerate(Family::P, 3);
  auto   ids = ideal(m, 1);
  for (elem_id x : ids) {
    for (elem_id y : ids) {
      CHECK(hat_partition(multiply(m.at(x), m.at(y)))
            == multiply(hat_partition(m.at(x)), hat_partition(m.at(y))));
    }
  }
}

TEST_CASE("Brauer hat on the pictured rank-2 element of B_6") {
  Diagram alpha =
      Diagram::parse("P6 [{1,2},{3,-1},{4,5},{6,-6},{-2,-5},{-3,-4}]");
  CHECK(rank(alpha) == 2);
  CHECK(hat_brauer(alpha)
        == Diagram::parse("P6 [{1,2},{3,6},{4,5},{-1,-6},{-2,-5},{-3,-4}]"));
  CHECK(hat_brauer(hat_brauer(alpha)) == hat_brauer(alpha));
  CHECK_THROWS_AS(hat_brauer(Diagram::identity(6)), std::invalid_argument);
  CHECK_THROWS_AS(hat_brauer(Diagram::parse("P2 [{1,2,-1,-2}]")),
                  std::invalid_argument);
}

TEST_CASE("Brauer hat is a homomorphism on the rank <= 2 ideal of B_4") {
  Monoid m   = enumerate(Family::B, 4);
  auto   ids = ideal(m, 2);
  for (elem_id x : ids) {
    for (elem_id y : ids) {
      CHECK(hat_brauer(multiply(m.at(x), m.at(y)))
            == multiply(hat_brauer(m.at(x)), hat_brauer(m.at(y))));
    }
  }
}

TEST_CASE("phi compares H-related diagrams") {
  Diagram id2  = Diagram::identity(2);
  Diagram swap = Diagram::parse("P2 [{1,-2},{2,-1}]");
  CHECK(phi(id2, id2).is_identity());
  CHECK(phi(id2, swap) == Permutation({2, 1}));
  CHECK(phi(swap, id2) == Permutation({2, 1}));
  CHECK_THROWS_AS(phi(id2, Diagram::parse("P2 [{1,2},{-1,-2}]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi(Diagram::parse("P2 [{1,2},{-1,-2}]"),
                      Diagram::parse("P2 [{1,2},{-1,-2}]")),
                  std::invalid_argument);
}

TEST_CASE("phi on embedded permutations is composition with the inverse") {
  for (Family f : {Family::P, Family::B}) {
    int    n = f == Family::B ? 5 : 3;
    int    q = 3;
    std::vector<int> image{1, 2, 3};
    do {
      Permutation sigma(image);
      std::vector<int> image2{1, 2, 3};
      do {
        Permutation tau(image2);
        Diagram     sb = sigma_bar(f, n, sigma), tb = sigma_bar(f, n, tau);
        CHECK(phi(sb, tb) == sigma * tau.inverse());
      } while (std::next_permutation(image2.begin(), image2.end()));
    } while (std::next_permutation(image.begin(), image.end()));
  }
}

TEST_CASE("doubling a planar partition into a Jones element") {
  CHECK(pp_to_jones(Diagram::identity(3)) == Diagram::identity(6));

  // The pictured degree-8 planar partition and its degree-16 image.
  Diagram alpha = Diagram::parse(
      "P8 [{1,4,-1,-2,-4},{2,3},{5},{6},{7,-8},{8},{-3},{-5,-6,-7}]");
  Diagram expected = Diagram::parse(
      "P16 [{1,-1},{2,7},{3,6},{4,5},{8,-8},{9,10},{11,12},{13,-15},"
      "{14,-16},{15,16},{-2,-3},{-4,-7},{-5,-6},{-9,-14},{-10,-11},"
      "{-12,-13}]");
  CHECK(pp_to_jones(alpha) == expected);
  CHECK(is_member(expected, Family::J));

  CHECK_THROWS_AS(pp_to_jones(Diagram::parse("P2 [{1,-2},{2,-1}]")),
                  std::invalid_argument);
}

TEST_CASE("doubling is a rank-doubling homomorphism on PP_2") {
  Monoid pp2 = enumerate(Family::PP, 2);
  Monoid j4  = enumerate(Family::J, 4);
  CHECK(pp2.size() == j4.size());
  for (elem_id x = 0; x < pp2.size(); ++x) {
    Diagram image = pp_to_jones(pp2.at(x));
    CHECK(is_member(image, Family::J));
    CHECK(rank(image) == 2 * rank(pp2.at(x)));
    for (elem_id y = 0; y < pp2.size(); ++y) {
      CHECK(pp_to_jones(multiply(pp2.at(x), pp2.at(y)))
            == multiply(pp_to_jones(pp2.at(x)), pp_to_jones(pp2.at(y))));
    }
  }
}

TEST_CASE("partial permutations double into Brauer elements") {
  CHECK(pperm_to_brauer(Diagram::identity(3)) == Diagram::identity(6));

  // The pictured element of I_6 and its image in B_12.
  Diagram alpha = Diagram::parse(
      "P6 [{1,-3},{2},{3,-6},{4,-2},{5,-5},{6},{-1},{-4}]");
  Diagram expected = Diagram::parse(
      "P12 [{1,-5},{2,-6},{3,4},{5,-11},{6,-12},{7,-3},{8,-4},{9,-9},"
      "{10,-10},{11,12},{-1,-2},{-7,-8}]");
  CHECK(pperm_to_brauer(alpha) == expected);
  CHECK(is_member(expected, Family::B));
  CHECK_THROWS_AS(pperm_to_brauer(Diagram::parse("P2 [{1,2},{-1,-2}]")),
                  std::invalid_argument);
}

TEST_CASE("pperm doubling is a homomorphism on I_2 and I_3") {
  for (int n : {2, 3}) {
    Monoid m = enumerate(Family::I, n);
    for (elem_id x = 0; x < m.size(); ++x) {
      for (elem_id y = 0; y < m.size(); ++y) {
        CHECK(pperm_to_brauer(multiply(m.at(x), m.at(y)))
              == multiply(pperm_to_brauer(m.at(x)),
                          pperm_to_brauer(m.at(y))));
      }
    }
  }
}

TEST_CASE("planarity is equivalent to the doubling being a Jones member") {
  Monoid p3 = enumerate(Family::P, 3);
  for (elem_id x = 0; x < p3.size(); ++x) {
    if (is_planar(p3.at(x))) {
      CHECK(is_member(pp_to_jones(p3.at(x)), Family::J));
    } else {
      CHECK_THROWS_AS(pp_to_jones(p3.at(x)), std::invalid_argument);
    }
  }
}
