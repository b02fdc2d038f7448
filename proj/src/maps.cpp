#include "diagcong/maps.hpp"

#include <algorithm>
#include <stdexcept>

#include "diagcong/family.hpp"

namespace diagcong {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int i : image_) {
    if (i < 1 || i > static_cast<int>(image_.size()) || seen[i - 1]) {
      throw std::invalid_argument("not a permutation image");
    }
    seen[i - 1] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> image(degree);
  for (int i = 0; i < degree; ++i) {
    image[i] = i + 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> image(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) {
    image[image_[i] - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::operator*(Permutation const& that) const {
  std::vector<int> image(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) {
    image[i] = that.image_[image_[i] - 1];
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

bool Permutation::is_even() const {
  std::vector<char> seen(image_.size(), 0);
  int               transpositions = 0;
  for (size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    int len = 0;
    for (size_t j = i; !seen[j]; j = image_[j] - 1) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

bool Permutation::is_klein() const {
  if (is_identity()) {
    return true;
  }
  if (degree() != 4) {
    return false;
  }
  for (size_t i = 0; i < image_.size(); ++i) {
    int j = image_[i];
    if (j == static_cast<int>(i) + 1 || image_[j - 1] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

Diagram hat_partition(Diagram const& a) {
  std::vector<std::vector<vertex_t>> blocks;
  for (auto const& block : a.blocks()) {
    std::vector<vertex_t> up, down;
    for (vertex_t v : block) {
      (v > 0 ? up : down).push_back(v);
    }
    if (!up.empty()) {
      blocks.push_back(std::move(up));
    }
    if (!down.empty()) {
      blocks.push_back(std::move(down));
    }
  }
  return Diagram::make(a.degree(), std::move(blocks));
}

Diagram hat_brauer(Diagram const& a) {
  if (!is_member(a, Family::B)) {
    throw std::invalid_argument("hat_brauer: not a Brauer diagram: "
                                + a.to_string());
  }
  int r = rank(a);
  if (r == 0) {
    return a;
  }
  if (r != 2) {
    throw std::invalid_argument("hat_brauer: rank must be 0 or 2, got "
                                + std::to_string(r));
  }
  std::vector<std::vector<vertex_t>> blocks;
  std::vector<vertex_t>              up, down;
  for (auto const& block : a.blocks()) {
    if ((block[0] > 0) != (block[1] > 0)) {
      up.push_back(block[0]);
      down.push_back(block[1]);
    } else {
      blocks.push_back(block);
    }
  }
  blocks.push_back(std::move(up));
  blocks.push_back(std::move(down));
  return Diagram::make(a.degree(), std::move(blocks));
}

Permutation phi(Diagram const& a, Diagram const& b) {
  DiagramStats const sa = stats(a), sb = stats(b);
  if (sa.rank == 0 || sa.rank != sb.rank || sa.dom != sb.dom
      || sa.codom != sb.codom || sa.ker != sb.ker || sa.coker != sb.coker) {
    throw std::invalid_argument("phi: diagrams are not H-related of rank >= 1");
  }
  // Transversal kernel classes of a, ordered by minimum.
  std::vector<std::vector<int>> classes;
  for (auto const& block : a.blocks()) {
    std::vector<int> up;
    bool             has_down = false;
    for (vertex_t v : block) {
      if (v > 0) {
        up.push_back(v);
      } else {
        has_down = true;
      }
    }
    if (!up.empty() && has_down) {
      classes.push_back(std::move(up));
    }
  }
  std::sort(classes.begin(),
            classes.end(),
            [](std::vector<int> const& x, std::vector<int> const& y) {
              return x.front() < y.front();
            });
  auto class_index = [&classes](std::vector<int> const& c) {
    for (size_t i = 0; i < classes.size(); ++i) {
      if (classes[i] == c) {
        return static_cast<int>(i) + 1;
      }
    }
    return 0;
  };
  Diagram const    p = multiply(a, star(b));
  std::vector<int> image(classes.size(), 0);
  for (auto const& block : p.blocks()) {
    std::vector<int> up, down;
    for (vertex_t v : block) {
      (v > 0 ? up : down).push_back(v > 0 ? v : -v);
    }
    if (up.empty() || down.empty()) {
      continue;
    }
    std::sort(down.begin(), down.end());
    int i = class_index(up), j = class_index(down);
    if (i == 0 || j == 0 || image[i - 1] != 0) {
      throw std::invalid_argument("phi: product has unexpected shape");
    }
    image[i - 1] = j;
  }
  return Permutation(std::move(image));
}

Diagram pp_to_jones(Diagram const& a) {
  if (!is_planar(a)) {
    throw std::invalid_argument("pp_to_jones: input is not planar: "
                                + a.to_string());
  }
  int const m = a.degree();
  // Doubled endpoints in the circular order 1..m, m'..1': an upper point i
  // splits into 2i-1 (entry) and 2i (exit); a lower point i' into (2i)'
  // (entry) and (2i-1)' (exit).
  auto entry = [](vertex_t v) {
    return v > 0 ? 2 * v - 1 : 2 * v;
  };
  auto exit = [](vertex_t v) {
    return v > 0 ? 2 * v : 2 * v + 1;
  };
  std::vector<std::vector<vertex_t>> blocks;
  for (auto const& block : a.blocks()) {
    // Members in circular order: upper points ascending, then lower points
    // descending.
    std::vector<vertex_t> cyc;
    for (vertex_t v : block) {
      if (v > 0) {
        cyc.push_back(v);
      }
    }
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
      if (*it < 0) {
        cyc.push_back(*it);
      }
    }
    for (size_t i = 0; i < cyc.size(); ++i) {
      vertex_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      blocks.push_back({exit(from), entry(to)});
    }
  }
  return Diagram::make(2 * m, std::move(blocks));
}

Diagram pperm_to_brauer(Diagram const& a) {
  if (!is_member(a, Family::I)) {
    throw std::invalid_argument("pperm_to_brauer: not a partial permutation: "
                                + a.to_string());
  }
  int const m = a.degree();
  std::vector<std::vector<vertex_t>> blocks;
  for (auto const& block : a.blocks()) {
    if (block.size() == 2) {
      int i = block[0], j = -block[1];
      blocks.push_back({2 * i - 1, -(2 * j - 1)});
      blocks.push_back({2 * i, -(2 * j)});
    } else if (block[0] > 0) {
      int i = block[0];
      blocks.push_back({2 * i - 1, 2 * i});
    } else {
      int j = -block[0];
      blocks.push_back({-(2 * j - 1), -(2 * j)});
    }
  }
  return Diagram::make(2 * m, std::move(blocks));
}

}  // namespace diagcong
