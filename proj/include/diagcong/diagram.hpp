#ifndef DIAGCONG_DIAGRAM_HPP_
#define DIAGCONG_DIAGRAM_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace diagcong {

// A vertex of a degree-n diagram: i in {1..n} is the i-th upper point,
// -i is the i-th lower (primed) point.  Never zero.
using vertex_t = int;

// Key order used everywhere for canonical forms: 1 < 2 < ... < n < -1 < -2
// < ... < -n.  Returns a value in [0, 2n).
inline int vertex_key(vertex_t v, int degree) {
  return v > 0 ? v - 1 : degree - v - 1;
}

inline vertex_t vertex_of_key(int key, int degree) {
  return key < degree ? key + 1 : -(key - degree + 1);
}

struct DiagramStats {
  int                           rank;
  std::vector<int>              dom;     // ascending
  std::vector<int>              codom;   // ascending
  std::vector<std::vector<int>> ker;     // partition of {1..n}, canonical
  std::vector<std::vector<int>> coker;   // partition of {1..n}, canonical
};

// A set partition of {1..n, -1..-n} in canonical form: every block sorted by
// vertex_key, blocks sorted by the key of their first (minimal) vertex.  Two
// diagrams are equal iff degree and blocks coincide.
class Diagram {
 public:
  Diagram() : degree_(0) {}

  // Validates and canonicalizes; throws std::invalid_argument on overlap,
  // missing vertex, or out-of-range vertex (the message names the vertex).
  static Diagram make(int degree, std::vector<std::vector<vertex_t>> blocks);

  static Diagram identity(int degree);

  int degree() const { return degree_; }

  std::vector<std::vector<vertex_t>> const& blocks() const { return blocks_; }

  size_t number_of_blocks() const { return blocks_.size(); }

  bool operator==(Diagram const& that) const {
    return degree_ == that.degree_ && blocks_ == that.blocks_;
  }
  bool operator!=(Diagram const& that) const { return !(*this == that); }
  bool operator<(Diagram const& that) const;

  size_t hash() const;

  // Bit-exact serialization, e.g. "P6 [{1,4},{2,3,-4,-5},{5,6},{-1,-2,-6},{-3}]".
  std::string to_string() const;

  // Accepts blocks in arbitrary order (and optional "P<deg> " prefix);
  // re-canonicalizes.  If the string carries no prefix, degree must be given.
  static Diagram parse(std::string const& s, int degree = 0);

 private:
  friend Diagram from_canonical_blocks(int, std::vector<std::vector<vertex_t>>);

  int                                degree_;
  std::vector<std::vector<vertex_t>> blocks_;
};

// Trusted constructor for generators that emit blocks already in canonical
// order; validated only by assertions.
Diagram from_canonical_blocks(int degree,
                              std::vector<std::vector<vertex_t>> blocks);

// Product via the 3n-vertex product graph: a's lower row is identified with
// b's upper row and connected components are read off the outer 2n vertices.
// Throws on degree mismatch.
Diagram multiply(Diagram const& a, Diagram const& b);

// Reflection in the horizontal axis: v -> -v in every block.
Diagram star(Diagram const& a);

DiagramStats stats(Diagram const& a);

int rank(Diagram const& a);

std::ostream& operator<<(std::ostream& os, Diagram const& d);

}  // namespace diagcong

template <>
struct std::hash<diagcong::Diagram> {
  size_t operator()(diagcong::Diagram const& d) const { return d.hash(); }
};

#endif  // DIAGCONG_DIAGRAM_HPP_
