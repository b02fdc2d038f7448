#ifndef DIAGCONG_FAMILY_HPP_
#define DIAGCONG_FAMILY_HPP_

#include <string>

#include "diagram.hpp"

namespace diagcong {

// The nine diagram monoid families.  P = partition, PB = partial Brauer,
// B = Brauer, PP = planar partition, M = Motzkin, J = Jones, I = symmetric
// inverse, O = order-preserving partial permutations, S = symmetric group.
enum class Family { P, PB, B, PP, M, J, I, O, S };

Family      family_from_string(std::string const& s);
std::string to_string(Family f);

// Noncrossing test in the circular order 1, 2, ..., n, n', (n-1)', ..., 1':
// no two blocks interleave.
bool is_planar(Diagram const& a);

bool is_member(Diagram const& a, Family f);

// True for the families on which Green's H is the trivial relation, i.e.
// whose maximal subgroups are all trivial.
inline bool h_trivial(Family f) {
  return f == Family::PP || f == Family::M || f == Family::J || f == Family::O;
}

// Families whose blocks all have size <= 2.
inline bool blocks_at_most_two(Family f) {
  return f != Family::P && f != Family::PP;
}

// Rank step between consecutive J-classes: 2 for B and J, 1 otherwise.
inline int rank_step(Family f) {
  return (f == Family::B || f == Family::J) ? 2 : 1;
}

}  // namespace diagcong

#endif  // DIAGCONG_FAMILY_HPP_
