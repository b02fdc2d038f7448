#include "diagcong/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace diagcong {

namespace {

std::vector<uint32_t> normalize_classes(std::vector<uint32_t> cls) {
  std::vector<uint32_t> remap(cls.size(), UINT32_MAX);
  uint32_t              next = 0;
  for (auto& c : cls) {
    if (remap[c] == UINT32_MAX) {
      remap[c] = next++;
    }
    c = remap[c];
  }
  return cls;
}

struct Dsu {
  explicit Dsu(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  }
  // Returns false if already united.
  bool unite(uint32_t x, uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    parent[x] = y;
    return true;
  }
  std::vector<uint32_t> parent;
};

std::vector<uint32_t> classes_from_dsu(Dsu& dsu) {
  std::vector<uint32_t> cls(dsu.parent.size());
  for (uint32_t i = 0; i < cls.size(); ++i) {
    cls[i] = dsu.find(i);
  }
  return normalize_classes(std::move(cls));
}

void require_same_monoid(Congruence const& a, Congruence const& b) {
  if (&a.monoid() != &b.monoid()) {
    throw std::invalid_argument("congruences live on different monoids");
  }
}

}  // namespace

Congruence::Congruence(Monoid const& m, std::vector<uint32_t> cls)
    : monoid_(&m), cls_(normalize_classes(std::move(cls))) {
  if (cls_.size() != m.size()) {
    throw std::invalid_argument("class vector does not cover the monoid");
  }
  num_classes_ = cls_.empty() ? 0 : *std::max_element(cls_.begin(), cls_.end()) + 1;
}

Congruence Congruence::trivial(Monoid const& m) {
  std::vector<uint32_t> cls(m.size());
  std::iota(cls.begin(), cls.end(), 0);
  return Congruence(m, std::move(cls));
}

Congruence Congruence::universal(Monoid const& m) {
  return Congruence(m, std::vector<uint32_t>(m.size(), 0));
}

std::vector<uint32_t> Congruence::class_sizes() const {
  std::vector<uint32_t> sizes(num_classes_, 0);
  for (uint32_t c : cls_) {
    ++sizes[c];
  }
  return sizes;
}

size_t Congruence::hash() const {
  size_t h = 14695981039346656037ULL;
  for (uint32_t c : cls_) {
    h = (h ^ c) * 1099511628211ULL;
  }
  return h;
}

Congruence generated_congruence(
    Monoid const& m, std::vector<std::pair<elem_id, elem_id>> const& pairs) {
  size_t const n = m.size();
  Dsu          dsu(n);
  std::vector<std::pair<elem_id, elem_id>> pending(pairs);
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    if (!dsu.unite(x, y)) {
      continue;
    }
    for (elem_id g = 0; g < n; ++g) {
      elem_id gx = m.product(g, x), gy = m.product(g, y);
      if (dsu.find(gx) != dsu.find(gy)) {
        pending.emplace_back(gx, gy);
      }
      elem_id xg = m.product(x, g), yg = m.product(y, g);
      if (dsu.find(xg) != dsu.find(yg)) {
        pending.emplace_back(xg, yg);
      }
    }
  }
  return Congruence(m, classes_from_dsu(dsu));
}

Congruence join(Congruence const& a, Congruence const& b) {
  require_same_monoid(a, b);
  size_t const n = a.classes().size();
  Dsu          dsu(n);
  std::vector<uint32_t> first_a(a.num_classes(), UINT32_MAX);
  std::vector<uint32_t> first_b(b.num_classes(), UINT32_MAX);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t& fa = first_a[a.classes()[i]];
    if (fa == UINT32_MAX) {
      fa = i;
    } else {
      dsu.unite(i, fa);
    }
    uint32_t& fb = first_b[b.classes()[i]];
    if (fb == UINT32_MAX) {
      fb = i;
    } else {
      dsu.unite(i, fb);
    }
  }
  return Congruence(a.monoid(), classes_from_dsu(dsu));
}

Congruence meet(Congruence const& a, Congruence const& b) {
  require_same_monoid(a, b);
  size_t const          n = a.classes().size();
  std::vector<uint32_t> cls(n);
  std::unordered_map<uint64_t, uint32_t> ids;
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t key = (static_cast<uint64_t>(a.classes()[i]) << 32) | b.classes()[i];
    auto [it, _] = ids.emplace(key, static_cast<uint32_t>(ids.size()));
    cls[i]       = it->second;
  }
  return Congruence(a.monoid(), std::move(cls));
}

bool leq(Congruence const& a, Congruence const& b) {
  require_same_monoid(a, b);
  std::vector<uint32_t> image(a.num_classes(), UINT32_MAX);
  for (size_t i = 0; i < a.classes().size(); ++i) {
    uint32_t& img = image[a.classes()[i]];
    if (img == UINT32_MAX) {
      img = b.classes()[i];
    } else if (img != b.classes()[i]) {
      return false;
    }
  }
  return true;
}

bool verify_congruence(Monoid const& m, std::vector<uint32_t> const& cls) {
  if (cls.size() != m.size()) {
    return false;
  }
  uint32_t num = 0;
  for (uint32_t c : cls) {
    num = std::max(num, c + 1);
  }
  // For every g, the image of each class under left (and right) translation
  // must land inside a single class.
  std::vector<uint32_t> seen(num, UINT32_MAX);
  std::vector<uint32_t> value(num, 0);
  uint32_t              stamp = 0;
  for (elem_id g = 0; g < m.size(); ++g) {
    ++stamp;
    for (elem_id x = 0; x < m.size(); ++x) {
      uint32_t c  = cls[x];
      uint32_t gx = cls[m.product(g, x)];
      if (seen[c] != stamp) {
        seen[c]  = stamp;
        value[c] = gx;
      } else if (value[c] != gx) {
        return false;
      }
    }
    ++stamp;
    for (elem_id x = 0; x < m.size(); ++x) {
      uint32_t c  = cls[x];
      uint32_t xg = cls[m.product(x, g)];
      if (seen[c] != stamp) {
        seen[c]  = stamp;
        value[c] = xg;
      } else if (value[c] != xg) {
        return false;
      }
    }
  }
  return true;
}

bool is_star_congruence(Congruence const& c) {
  Monoid const& m = c.monoid();
  // x ~ y implies x* ~ y*: check per class via the star image of the first
  // member of each class.
  std::vector<uint32_t> image(c.num_classes(), UINT32_MAX);
  for (elem_id x = 0; x < m.size(); ++x) {
    uint32_t cl = c.classes()[x];
    uint32_t sx = c.classes()[m.star_of(x)];
    if (image[cl] == UINT32_MAX) {
      image[cl] = sx;
    } else if (image[cl] != sx) {
      return false;
    }
  }
  return true;
}

int CongruenceLattice::find(Congruence const& c) const {
  for (size_t i = 0; i < congruences.size(); ++i) {
    if (congruences[i] == c) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

bool CongruenceLattice::is_chain() const {
  return hasse.size() + 1 == congruences.size()
         && std::all_of(hasse.begin(), hasse.end(), [this](auto const& e) {
              return e.second == e.first + 1;
            });
}

CongruenceLattice make_lattice(std::vector<Congruence> congruences) {
  std::sort(congruences.begin(), congruences.end());
  congruences.erase(std::unique(congruences.begin(), congruences.end()),
                    congruences.end());
  CongruenceLattice lat;
  lat.congruences = std::move(congruences);
  size_t const k  = lat.congruences.size();
  lat.leq.assign(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      lat.leq[i][j] = leq(lat.congruences[i], lat.congruences[j]);
    }
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (i == j || !lat.leq[i][j]) {
        continue;
      }
      bool cover = true;
      for (size_t t = 0; t < k && cover; ++t) {
        if (t != i && t != j && lat.leq[i][t] && lat.leq[t][j]) {
          cover = false;
        }
      }
      if (cover) {
        lat.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  std::sort(lat.hasse.begin(), lat.hasse.end());
  lat.labels.assign(k, {});
  return lat;
}

CongruenceLattice all_congruences(Monoid const& m, uint64_t max_size) {
  if (m.size() > max_size) {
    throw std::length_error("all_congruences: size guard of "
                            + std::to_string(max_size) + " exceeded by "
                            + to_string(m.family()) + "_"
                            + std::to_string(m.degree()) + " ("
                            + std::to_string(m.size()) + " elements)");
  }
  std::vector<Congruence>    found;
  std::unordered_set<size_t> hashes;
  auto add = [&](Congruence c) {
    size_t h = c.hash();
    if (hashes.count(h)) {
      for (auto const& existing : found) {
        if (existing == c) {
          return false;
        }
      }
    }
    hashes.insert(h);
    found.push_back(std::move(c));
    return true;
  };
  add(Congruence::trivial(m));
  for (elem_id x = 0; x < m.size(); ++x) {
    for (elem_id y = x + 1; y < m.size(); ++y) {
      add(principal_congruence(m, x, y));
    }
  }
  // Close under binary join; the worklist is over new congruences only.
  std::vector<size_t> frontier(found.size());
  std::iota(frontier.begin(), frontier.end(), 0);
  while (!frontier.empty()) {
    size_t i = frontier.back();
    frontier.pop_back();
    for (size_t j = 0; j < found.size(); ++j) {
      if (i == j) {
        continue;
      }
      Congruence c = join(found[i], found[j]);
      if (add(std::move(c))) {
        frontier.push_back(found.size() - 1);
      }
    }
  }
  return make_lattice(std::move(found));
}

}  // namespace diagcong
