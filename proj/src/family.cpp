#include "diagcong/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace diagcong {

Family family_from_string(std::string const& s) {
  if (s == "P") return Family::P;
  if (s == "PB") return Family::PB;
  if (s == "B") return Family::B;
  if (s == "PP") return Family::PP;
  if (s == "M") return Family::M;
  if (s == "J") return Family::J;
  if (s == "I") return Family::I;
  if (s == "O") return Family::O;
  if (s == "S") return Family::S;
  throw std::invalid_argument("unknown family: " + s);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::PB: return "PB";
    case Family::B: return "B";
    case Family::PP: return "PP";
    case Family::M: return "M";
    case Family::J: return "J";
    case Family::I: return "I";
    case Family::O: return "O";
    case Family::S: return "S";
  }
  throw std::invalid_argument("bad family tag");
}

namespace {

// Position of v in the circular order 1, ..., n, n', ..., 1'.
inline int circular_pos(vertex_t v, int n) {
  return v > 0 ? v - 1 : 2 * n + v;
}

// Two blocks interleave iff, reading their circular positions merged in
// order, membership alternates A B A B somewhere.
bool interleave(std::vector<int> const& a, std::vector<int> const& b) {
  size_t i = 0, j = 0;
  int  switches = 0;
  bool cur      = false;
  bool started  = false;
  while (i < a.size() || j < b.size()) {
    bool from_a = j >= b.size() || (i < a.size() && a[i] < b[j]);
    if (!started || from_a != cur) {
      if (started) {
        ++switches;
      }
      cur     = from_a;
      started = true;
    }
    if (from_a) {
      ++i;
    } else {
      ++j;
    }
  }
  return switches >= 3;
}

}  // namespace

bool is_planar(Diagram const& a) {
  int const n = a.degree();
  std::vector<std::vector<int>> pos;
  pos.reserve(a.number_of_blocks());
  for (auto const& block : a.blocks()) {
    std::vector<int> p;
    p.reserve(block.size());
    for (vertex_t v : block) {
      p.push_back(circular_pos(v, n));
    }
    std::sort(p.begin(), p.end());
    pos.push_back(std::move(p));
  }
  for (size_t i = 0; i < pos.size(); ++i) {
    for (size_t j = i + 1; j < pos.size(); ++j) {
      if (interleave(pos[i], pos[j])) {
        return false;
      }
    }
  }
  return true;
}

bool is_member(Diagram const& a, Family f) {
  switch (f) {
    case Family::P:
      return true;
    case Family::PP:
      return is_planar(a);
    case Family::PB:
    case Family::B:
    case Family::M:
    case Family::J:
      for (auto const& block : a.blocks()) {
        if (block.size() > 2) {
          return false;
        }
        if ((f == Family::B || f == Family::J) && block.size() != 2) {
          return false;
        }
      }
      if (f == Family::M || f == Family::J) {
        return is_planar(a);
      }
      return true;
    case Family::I:
    case Family::O:
    case Family::S: {
      // Blocks are transversal pairs {i, j'} or, for I and O, singletons.
      std::vector<std::pair<int, int>> transversals;
      for (auto const& block : a.blocks()) {
        if (block.size() == 1) {
          if (f == Family::S) {
            return false;
          }
          continue;
        }
        if (block.size() != 2 || (block[0] > 0) == (block[1] > 0)) {
          return false;
        }
        transversals.emplace_back(block[0], -block[1]);
      }
      if (f == Family::O) {
        // dom -> codom must be strictly increasing; transversals come out of
        // the canonical form sorted by upper point.
        for (size_t i = 1; i < transversals.size(); ++i) {
          if (transversals[i].second <= transversals[i - 1].second) {
            return false;
          }
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace diagcong
