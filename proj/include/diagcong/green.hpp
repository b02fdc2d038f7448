#ifndef DIAGCONG_GREEN_HPP_
#define DIAGCONG_GREEN_HPP_

#include <vector>

#include "maps.hpp"
#include "monoid.hpp"

namespace diagcong {

// Class-id vectors over element ids for each of Green's relations, plus the
// rank chain.  In these monoids J = D and the J-classes are totally ordered
// by rank.
struct GreenStructure {
  std::vector<uint32_t> r, l, h, d, j;
  std::vector<int>      ranks;  // occurring ranks, ascending

  size_t num_classes(std::vector<uint32_t> const& cls) const {
    uint32_t m = 0;
    for (uint32_t c : cls) {
      m = std::max(m, c + 1);
    }
    return m;
  }
};

// R/L/H from (co)domain and (co)kernel, J from rank.
GreenStructure green(Monoid const& m);

// Brute-force structure from principal (one- and two-sided) ideal equality;
// used as a test oracle for green().
GreenStructure green_oracle(Monoid const& m);

// Ids of elements of rank <= q.
std::vector<elem_id> ideal(Monoid const& m, int q);

// Ids of elements of rank exactly q.
std::vector<elem_id> j_class(Monoid const& m, int q);

std::vector<elem_id> idempotents(Monoid const& m);
std::vector<elem_id> projections(Monoid const& m);

// The H-class of the canonical rank-q idempotent together with the
// isomorphism to S_q (trivial group when H is trivial): perms[i] is the
// permutation represented by ids[i].
struct MaximalSubgroup {
  std::vector<elem_id>     ids;
  std::vector<Permutation> perms;
};
MaximalSubgroup maximal_subgroup(Monoid const& m, int q);

// Both stability implications, checked exhaustively:
// xa J x => xa R x and ax J x => ax L x.
bool check_stability(Monoid const& m);

struct MinimalIdealInfo {
  int    rank;
  size_t size;
  bool   is_rectangular_band;
};
MinimalIdealInfo check_minimal_ideal(Monoid const& m);

}  // namespace diagcong

#endif  // DIAGCONG_GREEN_HPP_
