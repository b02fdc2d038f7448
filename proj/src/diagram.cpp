#include "diagcong/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace diagcong {

namespace {

void canonicalize(int degree, std::vector<std::vector<vertex_t>>& blocks) {
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end(), [degree](vertex_t a, vertex_t b) {
      return vertex_key(a, degree) < vertex_key(b, degree);
    });
  }
  std::sort(blocks.begin(),
            blocks.end(),
            [degree](std::vector<vertex_t> const& a,
                     std::vector<vertex_t> const& b) {
              return vertex_key(a.front(), degree)
                     < vertex_key(b.front(), degree);
            });
}

// Minimal disjoint-set structure used by multiply.
struct Dsu {
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[x] = y;
    }
  }
  std::vector<int> parent;
};

}  // namespace

Diagram from_canonical_blocks(int degree,
                              std::vector<std::vector<vertex_t>> blocks) {
  Diagram d;
  d.degree_ = degree;
  d.blocks_ = std::move(blocks);
#ifndef NDEBUG
  Diagram check = Diagram::make(degree, d.blocks_);
  assert(check == d);
#endif
  return d;
}

Diagram Diagram::make(int degree, std::vector<std::vector<vertex_t>> blocks) {
  if (degree < 1) {
    throw std::invalid_argument("degree must be positive, got "
                                + std::to_string(degree));
  }
  std::vector<char> seen(2 * degree, 0);
  for (auto const& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("empty block");
    }
    for (vertex_t v : block) {
      if (v == 0 || v > degree || v < -degree) {
        throw std::invalid_argument("vertex " + std::to_string(v)
                                    + " out of range for degree "
                                    + std::to_string(degree));
      }
      int k = vertex_key(v, degree);
      if (seen[k]) {
        throw std::invalid_argument("vertex " + std::to_string(v)
                                    + " in two blocks");
      }
      seen[k] = 1;
    }
  }
  for (int k = 0; k < 2 * degree; ++k) {
    if (!seen[k]) {
      throw std::invalid_argument(
          "vertex " + std::to_string(vertex_of_key(k, degree)) + " missing");
    }
  }
  Diagram d;
  d.degree_ = degree;
  d.blocks_ = std::move(blocks);
  canonicalize(degree, d.blocks_);
  return d;
}

Diagram Diagram::identity(int degree) {
  std::vector<std::vector<vertex_t>> blocks;
  blocks.reserve(degree);
  for (int i = 1; i <= degree; ++i) {
    blocks.push_back({i, -i});
  }
  return from_canonical_blocks(degree, std::move(blocks));
}

bool Diagram::operator<(Diagram const& that) const {
  if (degree_ != that.degree_) {
    return degree_ < that.degree_;
  }
  auto key_less = [this](std::vector<vertex_t> const& a,
                         std::vector<vertex_t> const& b) {
    size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
      int ka = vertex_key(a[i], degree_), kb = vertex_key(b[i], degree_);
      if (ka != kb) {
        return ka < kb;
      }
    }
    return a.size() < b.size();
  };
  return std::lexicographical_compare(blocks_.begin(),
                                      blocks_.end(),
                                      that.blocks_.begin(),
                                      that.blocks_.end(),
                                      key_less);
}

size_t Diagram::hash() const {
  size_t h = 1469598103934665603ULL;
  auto mix = [&h](size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<size_t>(degree_));
  for (auto const& block : blocks_) {
    mix(block.size());
    for (vertex_t v : block) {
      mix(static_cast<size_t>(static_cast<int64_t>(v) + (1 << 20)));
    }
  }
  return h;
}

std::string Diagram::to_string() const {
  std::string s = "P" + std::to_string(degree_) + " [";
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += "{";
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j > 0) {
        s += ",";
      }
      s += std::to_string(blocks_[i][j]);
    }
    s += "}";
  }
  s += "]";
  return s;
}

Diagram Diagram::parse(std::string const& s, int degree) {
  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  };
  skip_ws();
  if (pos < s.size() && s[pos] == 'P') {
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == start) {
      throw std::invalid_argument("expected degree after 'P' in: " + s);
    }
    int parsed = std::stoi(s.substr(start, pos - start));
    if (degree != 0 && degree != parsed) {
      throw std::invalid_argument("degree mismatch: prefix says "
                                  + std::to_string(parsed) + ", caller says "
                                  + std::to_string(degree));
    }
    degree = parsed;
  }
  if (degree <= 0) {
    throw std::invalid_argument("no degree given for diagram: " + s);
  }
  skip_ws();
  if (pos >= s.size() || s[pos] != '[') {
    throw std::invalid_argument("expected '[' in diagram: " + s);
  }
  ++pos;
  std::vector<std::vector<vertex_t>> blocks;
  skip_ws();
  while (pos < s.size() && s[pos] != ']') {
    skip_ws();
    if (s[pos] == ',') {
      ++pos;
      skip_ws();
    }
    if (s[pos] != '{') {
      throw std::invalid_argument("expected '{' in diagram: " + s);
    }
    ++pos;
    std::vector<vertex_t> block;
    skip_ws();
    while (pos < s.size() && s[pos] != '}') {
      if (s[pos] == ',') {
        ++pos;
        skip_ws();
      }
      size_t start = pos;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        ++pos;
      }
      while (pos < s.size()
             && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
      if (pos == start) {
        throw std::invalid_argument("expected vertex in diagram: " + s);
      }
      block.push_back(std::stoi(s.substr(start, pos - start)));
      skip_ws();
    }
    if (pos >= s.size()) {
      throw std::invalid_argument("unterminated block in diagram: " + s);
    }
    ++pos;  // '}'
    blocks.push_back(std::move(block));
    skip_ws();
  }
  if (pos >= s.size()) {
    throw std::invalid_argument("unterminated diagram: " + s);
  }
  return make(degree, std::move(blocks));
}

Diagram multiply(Diagram const& a, Diagram const& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree())
                                + " vs " + std::to_string(b.degree()));
  }
  int const n = a.degree();
  // Product graph nodes: 0..n-1 upper, n..2n-1 middle, 2n..3n-1 lower.
  Dsu dsu(3 * n);
  for (auto const& block : a.blocks()) {
    int first = block[0] > 0 ? block[0] - 1 : n - block[0] - 1;
    for (vertex_t v : block) {
      dsu.unite(first, v > 0 ? v - 1 : n - v - 1);
    }
  }
  for (auto const& block : b.blocks()) {
    int first = block[0] > 0 ? n + block[0] - 1 : 2 * n - block[0] - 1;
    for (vertex_t v : block) {
      dsu.unite(first, v > 0 ? n + v - 1 : 2 * n - v - 1);
    }
  }
  // Read off the outer 2n vertices in key order; components appear in order
  // of their first member, so blocks come out canonical.
  std::vector<int> root_to_block(3 * n, -1);
  std::vector<std::vector<vertex_t>> blocks;
  for (int k = 0; k < 2 * n; ++k) {
    vertex_t v    = vertex_of_key(k, n);
    int      node = v > 0 ? v - 1 : 2 * n - v - 1;
    int      root = dsu.find(node);
    if (root_to_block[root] == -1) {
      root_to_block[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[root_to_block[root]].push_back(v);
  }
  return from_canonical_blocks(n, std::move(blocks));
}

Diagram star(Diagram const& a) {
  std::vector<std::vector<vertex_t>> blocks = a.blocks();
  for (auto& block : blocks) {
    for (vertex_t& v : block) {
      v = -v;
    }
  }
  return Diagram::make(a.degree(), std::move(blocks));
}

DiagramStats stats(Diagram const& a) {
  DiagramStats st;
  st.rank = 0;
  for (auto const& block : a.blocks()) {
    std::vector<int> up, down;
    for (vertex_t v : block) {
      if (v > 0) {
        up.push_back(v);
      } else {
        down.push_back(-v);
      }
    }
    if (!up.empty() && !down.empty()) {
      ++st.rank;
      st.dom.insert(st.dom.end(), up.begin(), up.end());
      st.codom.insert(st.codom.end(), down.begin(), down.end());
    }
    if (!up.empty()) {
      st.ker.push_back(std::move(up));
    }
    if (!down.empty()) {
      st.coker.push_back(std::move(down));
    }
  }
  std::sort(st.dom.begin(), st.dom.end());
  std::sort(st.codom.begin(), st.codom.end());
  auto by_min = [](std::vector<int> const& x, std::vector<int> const& y) {
    return x.front() < y.front();
  };
  std::sort(st.ker.begin(), st.ker.end(), by_min);
  std::sort(st.coker.begin(), st.coker.end(), by_min);
  return st;
}

int rank(Diagram const& a) {
  int r = 0;
  for (auto const& block : a.blocks()) {
    bool up = false, down = false;
    for (vertex_t v : block) {
      (v > 0 ? up : down) = true;
    }
    r += up && down;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, Diagram const& d) {
  return os << d.to_string();
}

}  // namespace diagcong
