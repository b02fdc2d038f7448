#ifndef DIAGCONG_CONGRUENCE_HPP_
#define DIAGCONG_CONGRUENCE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monoid.hpp"

namespace diagcong {

// An equivalence on a monoid's element ids, normalized so class ids appear
// in first-occurrence order; equality of congruences is vector comparison.
// Construction does not itself guarantee compatibility; everything produced
// by this module is a congruence, and verify_congruence is the exhaustive
// check.
class Congruence {
 public:
  Congruence() : monoid_(nullptr), num_classes_(0) {}
  Congruence(Monoid const& m, std::vector<uint32_t> cls);

  // The trivial and universal congruences.
  static Congruence trivial(Monoid const& m);
  static Congruence universal(Monoid const& m);

  Monoid const&                monoid() const { return *monoid_; }
  std::vector<uint32_t> const& classes() const { return cls_; }
  uint32_t num_classes() const { return num_classes_; }
  bool     related(elem_id x, elem_id y) const { return cls_[x] == cls_[y]; }

  std::vector<uint32_t> class_sizes() const;

  bool operator==(Congruence const& that) const {
    return monoid_ == that.monoid_ && cls_ == that.cls_;
  }
  bool operator!=(Congruence const& that) const { return !(*this == that); }
  // Deterministic order: num_classes descending, then class vector.
  bool operator<(Congruence const& that) const {
    if (num_classes_ != that.num_classes_) {
      return num_classes_ > that.num_classes_;
    }
    return cls_ < that.cls_;
  }

  size_t hash() const;

 private:
  Monoid const*         monoid_;
  std::vector<uint32_t> cls_;
  uint32_t              num_classes_;
};

// Least congruence containing the given pairs: disjoint-set closure with a
// worklist that, on every merge of x and y, enqueues (gx, gy) and (xg, yg)
// for every element g; one-sided extension iterated to fixpoint saturates
// two-sided closure.
Congruence generated_congruence(Monoid const& m,
                                std::vector<std::pair<elem_id, elem_id>> const& pairs);

inline Congruence principal_congruence(Monoid const& m, elem_id x, elem_id y) {
  return generated_congruence(m, {{x, y}});
}

// join = transitive closure of the union of the class partitions, meet =
// common refinement, leq = classwise refinement test.  All throw on a
// monoid mismatch.
Congruence join(Congruence const& a, Congruence const& b);
Congruence meet(Congruence const& a, Congruence const& b);
bool       leq(Congruence const& a, Congruence const& b);

// True iff the partition is an equivalence compatible on both sides,
// checked exhaustively.
bool verify_congruence(Monoid const& m, std::vector<uint32_t> const& cls);

// True iff every related pair stays related after star.
bool is_star_congruence(Congruence const& c);

struct CongruenceLattice {
  std::vector<Congruence>              congruences;  // sorted, deterministic
  std::vector<std::vector<bool>>       leq;          // refinement matrix
  std::vector<std::pair<int, int>>     hasse;        // covers, i < j in order
  std::vector<std::vector<std::string>> labels;      // names per node

  int  find(Congruence const& c) const;  // -1 if absent
  bool is_chain() const;
};

// Assembles order matrix and Hasse edges (transitive reduction) for an
// explicit list of congruences; sorts and deduplicates.
CongruenceLattice make_lattice(std::vector<Congruence> congruences);

// Every principal congruence (one per unordered element pair, deduplicated)
// closed under binary join; exhaustive since every congruence of a finite
// semigroup is a join of principal ones.  Throws when size() exceeds the
// guard.
CongruenceLattice all_congruences(Monoid const& m, uint64_t max_size = 1200);

}  // namespace diagcong

#endif  // DIAGCONG_CONGRUENCE_HPP_
