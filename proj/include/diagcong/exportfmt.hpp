#ifndef DIAGCONG_EXPORTFMT_HPP_
#define DIAGCONG_EXPORTFMT_HPP_

#include <string>

#include "catalog.hpp"
#include "congruence.hpp"

namespace diagcong {

// Deterministic DOT digraph: one node per congruence labeled
// "name (k classes)", one edge per Hasse cover, drawn bottom-to-top.
std::string export_dot(CongruenceLattice const& lat);

// {"family": .., "degree": .., "nodes": [{label, num_classes, class_sizes}],
//  "hasse": [[i, j], ...]}
std::string export_json(Family f, int degree, CongruenceLattice const& lat);

}  // namespace diagcong

#endif  // DIAGCONG_EXPORTFMT_HPP_
