#ifndef DIAGCONG_MONOID_HPP_
#define DIAGCONG_MONOID_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "diagram.hpp"
#include "family.hpp"

namespace diagcong {

using elem_id = uint32_t;

// A complete enumerated diagram monoid of one family at one degree.
// Elements are sorted by canonical serialization, so ids, class ids and all
// downstream output are reproducible.
class Monoid {
 public:
  // Cayley table is materialized when size()^2 <= max_table_entries,
  // otherwise products are computed on demand and memoized.
  static constexpr uint64_t kDefaultMaxTableEntries = 64'000'000;

  Monoid(Family f, int degree, std::vector<Diagram> elements,
         uint64_t max_table_entries = kDefaultMaxTableEntries);

  Family family() const { return family_; }
  int    degree() const { return degree_; }
  size_t size() const { return elements_.size(); }

  Diagram const& at(elem_id i) const { return elements_[i]; }
  elem_id        identity_id() const { return identity_id_; }

  bool    contains(Diagram const& d) const;
  elem_id id_of(Diagram const& d) const;  // throws if absent

  elem_id product(elem_id a, elem_id b) const;
  elem_id star_of(elem_id a) const { return star_[a]; }
  int     rank_of(elem_id a) const { return rank_[a]; }

  bool has_table() const { return !table_.empty(); }

 private:
  Family                                 family_;
  int                                    degree_;
  std::vector<Diagram>                   elements_;
  std::unordered_map<Diagram, elem_id>   index_;
  elem_id                                identity_id_;
  std::vector<elem_id>                   star_;
  std::vector<int>                       rank_;
  std::vector<elem_id>                   table_;  // size()^2 when enabled
  // Fallback product memo; guarded so a table-less Monoid stays shareable.
  struct Memo {
    std::mutex                             mutex;
    std::unordered_map<uint64_t, elem_id>  map;
  };
  std::unique_ptr<Memo> memo_;
};

// All degree-n members of the family, generated by direct enumeration of the
// set partitions of the 2n points (restricted-growth strings, with branches
// that already violate the family's block-size constraints pruned) filtered
// by is_member.  Throws when the monoid would exceed max_elements, naming
// the bound.
Monoid enumerate(Family f, int n,
                 uint64_t max_elements      = 1'000'000,
                 uint64_t max_table_entries = Monoid::kDefaultMaxTableEntries);

// The canonical rank-q idempotent: the partial identity on {1..q} for
// P/PB/PP/M/I/O/S, and for B/J the form with trailing arcs {q+1,q+2}, ...,
// {n-1,n} on both rows.
Diagram canonical_idempotent(Family f, int n, int q);

// The image of sigma in S_q under the family's embedding into degree n:
// transversals {i, (i sigma)'} for i <= q, completed like the canonical
// idempotent.  For O only the identity is order-preserving.
Diagram sigma_bar(Family f, int n, class Permutation const& sigma);

}  // namespace diagcong

#endif  // DIAGCONG_MONOID_HPP_
