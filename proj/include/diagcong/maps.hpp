#ifndef DIAGCONG_MAPS_HPP_
#define DIAGCONG_MAPS_HPP_

#include <vector>

#include "diagram.hpp"

namespace diagcong {

// A permutation of {1..degree}; image(i) is 1-based.  Composition is the
// right action: (i)(s * t) = ((i)s)t.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }

  Permutation inverse() const;
  Permutation operator*(Permutation const& that) const;

  bool operator==(Permutation const& that) const {
    return image_ == that.image_;
  }
  bool operator!=(Permutation const& that) const { return !(*this == that); }

  bool is_identity() const;
  bool is_even() const;
  // Identity or a product of two disjoint 2-cycles; only meaningful for
  // degree 4, where these form the normal Klein subgroup.
  bool is_klein() const;

  std::vector<int> const& image() const { return image_; }

 private:
  std::vector<int> image_;
};

// Splits every transversal A u B' into A and B'; non-transversals unchanged.
// Total on all diagrams; a homomorphism only on the rank <= 1 ideal.
Diagram hat_partition(Diagram const& a);

// For a Brauer diagram of rank 2 with transversals {i,j'} and {k,l'}:
// replaces them with {i,k} and {j',l'}.  Rank 0: unchanged.  Throws if the
// input is not a Brauer diagram of rank 0 or 2.
Diagram hat_brauer(Diagram const& a);

// For H-related a, b of rank q >= 1: order a's transversal kernel classes
// A_1..A_q by ascending minimum; a * star(b) sends each A_i to the dual of
// A_{i sigma}, and phi(a, b) = sigma.  Throws if a, b are not H-related or
// have rank 0.
Permutation phi(Diagram const& a, Diagram const& b);

// Injective homomorphism from planar partitions of degree m to Jones
// elements of degree 2m.  Every point is doubled, upper i into 2i-1, 2i and
// lower i' into (2i)', (2i-1)' in the circular order; each block's doubled
// points are matched cyclically, tracing the boundary of the block's
// canonical planar drawing.  rank doubles.  Throws on non-planar input.
Diagram pp_to_jones(Diagram const& a);

// Injective homomorphism from partial permutations of degree m to Brauer
// elements of degree 2m: a transversal {i,j'} becomes {2i-1,(2j-1)'} and
// {2i,(2j)'}; an undefined upper point i becomes the arc {2i-1,2i}, an
// undefined lower point j' the arc {(2j-1)',(2j)'}.  Throws if the input is
// not a partial permutation.
Diagram pperm_to_brauer(Diagram const& a);

}  // namespace diagcong

#endif  // DIAGCONG_MAPS_HPP_
