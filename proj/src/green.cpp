#include "diagcong/green.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diagcong {

namespace {

std::string key_of(std::vector<int> const& support,
                   std::vector<std::vector<int>> const& classes) {
  std::ostringstream os;
  for (int i : support) {
    os << i << ',';
  }
  os << '|';
  for (auto const& c : classes) {
    for (int i : c) {
      os << i << ',';
    }
    os << ';';
  }
  return os.str();
}

std::vector<uint32_t> classify(std::vector<std::string> const& keys) {
  std::map<std::string, uint32_t> ids;
  std::vector<uint32_t>           cls(keys.size());
  for (size_t i = 0; i < keys.size(); ++i) {
    auto [it, _] = ids.emplace(keys[i], static_cast<uint32_t>(ids.size()));
    cls[i]       = it->second;
  }
  return cls;
}

using Bitset = std::vector<uint64_t>;

void set_bit(Bitset& b, elem_id i) {
  b[i >> 6] |= uint64_t(1) << (i & 63);
}

std::vector<uint32_t> classify_bitsets(std::vector<Bitset> const& sets) {
  std::map<Bitset, uint32_t> ids;
  std::vector<uint32_t>      cls(sets.size());
  for (size_t i = 0; i < sets.size(); ++i) {
    auto [it, _] = ids.emplace(sets[i], static_cast<uint32_t>(ids.size()));
    cls[i]       = it->second;
  }
  return cls;
}

std::vector<uint32_t> normalize(std::vector<uint32_t> cls) {
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

std::vector<uint32_t> intersect_classes(std::vector<uint32_t> const& a,
                                        std::vector<uint32_t> const& b) {
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> ids;
  std::vector<uint32_t>                             cls(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    auto [it, _] = ids.emplace(std::make_pair(a[i], b[i]),
                               static_cast<uint32_t>(ids.size()));
    cls[i]       = it->second;
  }
  return cls;
}

}  // namespace

GreenStructure green(Monoid const& m) {
  size_t const             n = m.size();
  GreenStructure           g;
  std::vector<std::string> rkeys(n), lkeys(n);
  for (elem_id i = 0; i < n; ++i) {
    DiagramStats st = stats(m.at(i));
    rkeys[i]        = key_of(st.dom, st.ker);
    lkeys[i]        = key_of(st.codom, st.coker);
  }
  g.r = classify(rkeys);
  g.l = classify(lkeys);
  g.h = normalize(intersect_classes(g.r, g.l));
  std::vector<int> rank_set;
  std::vector<std::string> jkeys(n);
  for (elem_id i = 0; i < n; ++i) {
    jkeys[i] = std::to_string(m.rank_of(i));
    rank_set.push_back(m.rank_of(i));
  }
  g.j = classify(jkeys);
  g.d = g.j;
  std::sort(rank_set.begin(), rank_set.end());
  rank_set.erase(std::unique(rank_set.begin(), rank_set.end()),
                 rank_set.end());
  g.ranks = std::move(rank_set);
  return g;
}

GreenStructure green_oracle(Monoid const& m) {
  size_t const n     = m.size();
  size_t const words = (n + 63) / 64;
  GreenStructure g;

  std::vector<Bitset> right(n, Bitset(words, 0));
  std::vector<Bitset> left(n, Bitset(words, 0));
  for (elem_id a = 0; a < n; ++a) {
    set_bit(right[a], a);
    set_bit(left[a], a);
    for (elem_id s = 0; s < n; ++s) {
      set_bit(right[a], m.product(a, s));
      set_bit(left[a], m.product(s, a));
    }
  }
  g.r = classify_bitsets(right);
  g.l = classify_bitsets(left);
  g.h = normalize(intersect_classes(g.r, g.l));

  std::vector<Bitset> two_sided(n, Bitset(words, 0));
  for (elem_id a = 0; a < n; ++a) {
    // S^1 a S^1 = {a} u aS u Sa u SaS; with a monoid the first three are
    // covered by s a t over all s, t.
    for (elem_id s = 0; s < n; ++s) {
      elem_id sa = m.product(s, a);
      for (elem_id t = 0; t < n; ++t) {
        set_bit(two_sided[a], m.product(sa, t));
      }
    }
  }
  g.j = classify_bitsets(two_sided);

  // D = R v L: least equivalence containing both.
  std::vector<uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  };
  std::vector<elem_id> first_r(m.size(), UINT32_MAX), first_l(m.size(), UINT32_MAX);
  for (elem_id i = 0; i < n; ++i) {
    if (first_r[g.r[i]] == UINT32_MAX) {
      first_r[g.r[i]] = i;
    } else {
      parent[find(i)] = find(first_r[g.r[i]]);
    }
    if (first_l[g.l[i]] == UINT32_MAX) {
      first_l[g.l[i]] = i;
    } else {
      parent[find(i)] = find(first_l[g.l[i]]);
    }
  }
  std::vector<uint32_t> d(n);
  for (elem_id i = 0; i < n; ++i) {
    d[i] = find(i);
  }
  g.d = normalize(std::move(d));

  std::vector<int> rank_set;
  for (elem_id i = 0; i < n; ++i) {
    rank_set.push_back(m.rank_of(i));
  }
  std::sort(rank_set.begin(), rank_set.end());
  rank_set.erase(std::unique(rank_set.begin(), rank_set.end()),
                 rank_set.end());
  g.ranks = std::move(rank_set);
  return g;
}

std::vector<elem_id> ideal(Monoid const& m, int q) {
  std::vector<elem_id> ids;
  for (elem_id i = 0; i < m.size(); ++i) {
    if (m.rank_of(i) <= q) {
      ids.push_back(i);
    }
  }
  return ids;
}

std::vector<elem_id> j_class(Monoid const& m, int q) {
  std::vector<elem_id> ids;
  for (elem_id i = 0; i < m.size(); ++i) {
    if (m.rank_of(i) == q) {
      ids.push_back(i);
    }
  }
  return ids;
}

std::vector<elem_id> idempotents(Monoid const& m) {
  std::vector<elem_id> ids;
  for (elem_id i = 0; i < m.size(); ++i) {
    if (m.product(i, i) == i) {
      ids.push_back(i);
    }
  }
  return ids;
}

std::vector<elem_id> projections(Monoid const& m) {
  std::vector<elem_id> ids;
  for (elem_id i = 0; i < m.size(); ++i) {
    if (m.product(i, i) == i && m.star_of(i) == i) {
      ids.push_back(i);
    }
  }
  return ids;
}

MaximalSubgroup maximal_subgroup(Monoid const& m, int q) {
  auto jq = j_class(m, q);
  if (jq.empty()) {
    throw std::invalid_argument("maximal_subgroup: rank " + std::to_string(q)
                                + " does not occur in " + to_string(m.family())
                                + "_" + std::to_string(m.degree()));
  }
  Diagram      eps    = canonical_idempotent(m.family(), m.degree(), q);
  elem_id      eps_id = m.id_of(eps);
  DiagramStats se     = stats(eps);
  MaximalSubgroup g;
  for (elem_id i : jq) {
    DiagramStats st = stats(m.at(i));
    if (st.dom == se.dom && st.ker == se.ker && st.codom == se.codom
        && st.coker == se.coker) {
      g.ids.push_back(i);
      std::vector<int> image(q);
      for (auto const& block : m.at(i).blocks()) {
        if (block.size() == 2 && block[0] > 0 && block[1] < 0
            && block[0] <= q) {
          image[block[0] - 1] = -block[1];
        }
      }
      g.perms.emplace_back(std::move(image));
    }
  }
  (void) eps_id;
  return g;
}

bool check_stability(Monoid const& m) {
  GreenStructure g = green(m);
  for (elem_id x = 0; x < m.size(); ++x) {
    for (elem_id a = 0; a < m.size(); ++a) {
      elem_id xa = m.product(x, a);
      if (m.rank_of(xa) == m.rank_of(x) && g.r[xa] != g.r[x]) {
        return false;
      }
      elem_id ax = m.product(a, x);
      if (m.rank_of(ax) == m.rank_of(x) && g.l[ax] != g.l[x]) {
        return false;
      }
    }
  }
  return true;
}

MinimalIdealInfo check_minimal_ideal(Monoid const& m) {
  int min_rank = m.rank_of(0);
  for (elem_id i = 1; i < m.size(); ++i) {
    min_rank = std::min(min_rank, m.rank_of(i));
  }
  auto mi = ideal(m, min_rank);
  bool rect = true;
  for (elem_id x : mi) {
    for (elem_id y : mi) {
      if (m.product(m.product(x, y), x) != x) {
        rect = false;
        break;
      }
    }
    if (!rect) {
      break;
    }
  }
  return {min_rank, mi.size(), rect};
}

}  // namespace diagcong
