#ifndef DIAGCONG_CATALOG_HPP_
#define DIAGCONG_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "green.hpp"
#include "maps.hpp"
#include "monoid.hpp"

namespace diagcong {

// Normal subgroups of S_q form the chain 1 <= (K) <= A_q <= S_q, with K only
// at q = 4, only the trivial subgroup at q <= 1, and no A_2.
enum class NSKind { Trivial, Klein, Alternating, Symmetric };

struct NormalSubgroupSpec {
  int    q;
  NSKind kind;
};

// Throws unless the spec respects the chain for its rank.
void validate_subgroup_spec(NormalSubgroupSpec const& spec);

// The nontrivial kinds available at rank q, ascending.
std::vector<NSKind> proper_subgroup_kinds(int q);

bool perm_in_subgroup(Permutation const& p, NSKind kind);

// An (ideal, normal subgroup) pair: N sits in the maximal subgroup of the
// minimal J-class above the ideal.  retractable means the ideal admits a
// retraction onto the minimal ideal and every element of N acts as a single
// constant on it; both are machine-checked by make_in_pair.
struct INPair {
  int                ideal_rank;
  int                group_rank;
  NormalSubgroupSpec nsub;
  bool               retractable;
  std::string        tag;  // "0", "1", "2", "S_2", "K", ...
};

// Stable names for lattice nodes and classifier output.  Kind order is the
// display order within a merged node (Delta first, Nabla last).
struct CongruenceLabel {
  enum Kind { Delta, Rees, RN, Lam, Rho, Mu, Eta, Nabla };
  Kind        kind;
  std::string tag;  // rank for Rees, subgroup name for RN, IN-pair tag else

  std::string str() const;
  bool        operator==(CongruenceLabel const& o) const {
    return kind == o.kind && tag == o.tag;
  }
  bool operator<(CongruenceLabel const& o) const;
};

// Rees congruence: one class is the rank <= q ideal, all other elements are
// singletons.  Throws if q is not an occurring rank.
Congruence rees(Monoid const& m, int q);

// The unique retraction from the rank <= q ideal onto the minimal ideal, or
// nullopt when the ideal is not retractable.  image[x] is meaningful only
// for rank(x) <= ideal_rank.
struct Retraction {
  int                  ideal_rank;
  std::vector<elem_id> image;
};
std::optional<Retraction> retraction(Monoid const& m, int q);

// The relation nu_N on the rank-q J-class, as sorted pairs (x, y) with
// x <= y, including the diagonal of the J-class.  Computed via phi:
// nu_N = {(a, b) in J_q x J_q : a H b, phi(a, b) in N}.
std::vector<std::pair<elem_id, elem_id>> nu_fast(Monoid const& m,
                                                 NormalSubgroupSpec const& spec);

// Brute-force S^1 (Nbar x Nbar) S^1 intersect (J x J); test oracle.
std::vector<std::pair<elem_id, elem_id>> nu_oracle(Monoid const& m,
                                                   NormalSubgroupSpec const& spec);

// Builds and validates an IN-pair on m; throws if the group J-class is not
// the minimal one above the ideal or the spec is unsupported.
INPair make_in_pair(Monoid const& m, int ideal_rank,
                    NormalSubgroupSpec const& spec, std::string tag);

struct INPairCongruences {
  Congruence                r;
  std::optional<Congruence> lam, rho, mu, eta;
};

// R always; lam/rho/mu/eta only when the pair is retractable (throws if a
// non-retractable pair is asked for them via require_retractable).
INPairCongruences in_pair_congruences(Monoid const& m, INPair const& pair,
                                      bool require_retractable = false);

// True iff extending the partition of the minimal ideal by the diagonal
// yields a congruence: for all related (x, y) and s, (xs, ys) and (sx, sy)
// stay related.  cls is aligned with minimal_ideal_ids.
bool liftable_check(Monoid const& m,
                    std::vector<elem_id> const& minimal_ideal_ids,
                    std::vector<uint32_t> const& cls);

// The retractable IN-pairs the family admits, in ascending order.
std::vector<INPair> retractable_in_pairs(Monoid const& m);

// ----------------------------------------------------------------------
// Predicted lattices.

struct LabeledLattice {
  CongruenceLattice                         lattice;
  std::vector<std::vector<CongruenceLabel>> names;  // per node, sorted

  int node_with_label(CongruenceLabel const& l) const;
  // Display name of node i, e.g. "Delta=mu(0)".
  std::string name(int i) const;
};

// Throws when (family, degree) is outside the classification's range:
// P/PB/PP/M need n >= 2, B/J need n >= 3, I/O any n >= 1.
void check_classification_range(Family f, int n);

// Constructs every named congruence concretely over the enumerated monoid
// and assembles the labeled lattice.
LabeledLattice predicted_lattice(Monoid const& m);

// Labels + Hasse structure only, for degrees beyond the enumeration guard;
// node order follows the same (chain position, sublevel) rule the concrete
// lattice exhibits.  Unverifiable against brute force by construction.
struct SymbolicLattice {
  std::vector<std::vector<CongruenceLabel>> nodes;
  std::vector<std::pair<int, int>>          hasse;
  std::string                               name(int i) const;
};
SymbolicLattice predicted_lattice_symbolic(Family f, int n);

// Star-compatibility of each predicted node: every node
// except the lam and rho families.
bool predicted_star_compatible(std::vector<CongruenceLabel> const& names);

// ----------------------------------------------------------------------
// Classification of generating pairs (principal congruences).

// The label of the principal congruence generated by (a, b), by the
// classification tables' case analysis.  Throws outside the classified range
// or when a, b are not members.
CongruenceLabel classify_pair(Family f, int n, Diagram const& a,
                              Diagram const& b);

// The congruence a predicted-lattice label denotes, materialized over m.
Congruence realize_label(Monoid const& m, CongruenceLabel const& label);

}  // namespace diagcong

#endif  // DIAGCONG_CATALOG_HPP_
