#include "diagcong/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace diagcong {

namespace {

int minimal_rank(Monoid const& m) {
  int z = m.rank_of(0);
  for (elem_id i = 1; i < m.size(); ++i) {
    z = std::min(z, m.rank_of(i));
  }
  return z;
}

bool rank_occurs(Monoid const& m, int q) {
  for (elem_id i = 0; i < m.size(); ++i) {
    if (m.rank_of(i) == q) {
      return true;
    }
  }
  return false;
}

std::string nskind_tag(NSKind k, int q) {
  switch (k) {
    case NSKind::Trivial: return "1";
    case NSKind::Klein: return "K";
    case NSKind::Alternating: return "A_" + std::to_string(q);
    case NSKind::Symmetric: return "S_" + std::to_string(q);
  }
  return "?";
}

std::vector<Permutation> subgroup_elements(int q, NSKind kind) {
  std::vector<int> image(q);
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p(image);
    if (perm_in_subgroup(p, kind)) {
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
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
  void unite(uint32_t x, uint32_t y) {
    parent[find(x)] = find(y);
  }
  std::vector<uint32_t> parent;
};

Congruence congruence_from_dsu(Monoid const& m, Dsu& dsu) {
  std::vector<uint32_t> cls(m.size());
  for (uint32_t i = 0; i < m.size(); ++i) {
    cls[i] = dsu.find(i);
  }
  return Congruence(m, std::move(cls));
}

}  // namespace

void validate_subgroup_spec(NormalSubgroupSpec const& spec) {
  switch (spec.kind) {
    case NSKind::Trivial:
      if (spec.q < 0) {
        throw std::invalid_argument("subgroup spec: negative rank");
      }
      return;
    case NSKind::Klein:
      if (spec.q != 4) {
        throw std::invalid_argument("Klein subgroup only exists at rank 4");
      }
      return;
    case NSKind::Alternating:
      if (spec.q < 3) {
        throw std::invalid_argument(
            "alternating subgroup requires rank >= 3 (A_2 is trivial)");
      }
      return;
    case NSKind::Symmetric:
      if (spec.q < 2) {
        throw std::invalid_argument(
            "symmetric subgroup is only proper at rank >= 2");
      }
      return;
  }
}

std::vector<NSKind> proper_subgroup_kinds(int q) {
  if (q < 2) {
    return {};
  }
  if (q == 2) {
    return {NSKind::Symmetric};
  }
  if (q == 4) {
    return {NSKind::Klein, NSKind::Alternating, NSKind::Symmetric};
  }
  return {NSKind::Alternating, NSKind::Symmetric};
}

bool perm_in_subgroup(Permutation const& p, NSKind kind) {
  switch (kind) {
    case NSKind::Trivial: return p.is_identity();
    case NSKind::Klein: return p.is_klein();
    case NSKind::Alternating: return p.is_even();
    case NSKind::Symmetric: return true;
  }
  return false;
}

std::string CongruenceLabel::str() const {
  switch (kind) {
    case Delta: return "Delta";
    case Nabla: return "Nabla";
    case Rees: return "R(" + tag + ")";
    case RN: return "R(" + tag + ")";
    case Lam: return "lam(" + tag + ")";
    case Rho: return "rho(" + tag + ")";
    case Mu: return "mu(" + tag + ")";
    case Eta: return "eta(" + tag + ")";
  }
  return "?";
}

bool CongruenceLabel::operator<(CongruenceLabel const& o) const {
  if (kind != o.kind) {
    return kind < o.kind;
  }
  return tag < o.tag;
}

Congruence rees(Monoid const& m, int q) {
  if (!rank_occurs(m, q)) {
    throw std::invalid_argument("rees: rank " + std::to_string(q)
                                + " does not occur in " + to_string(m.family())
                                + "_" + std::to_string(m.degree()));
  }
  std::vector<uint32_t> cls(m.size());
  uint32_t              next = 1;
  for (elem_id i = 0; i < m.size(); ++i) {
    cls[i] = m.rank_of(i) <= q ? 0 : next++;
  }
  return Congruence(m, std::move(cls));
}

std::optional<Retraction> retraction(Monoid const& m, int q) {
  if (!rank_occurs(m, q)) {
    throw std::invalid_argument("retraction: rank " + std::to_string(q)
                                + " does not occur");
  }
  int const z       = minimal_rank(m);
  auto      min_ids = ideal(m, z);
  Retraction f;
  f.ideal_rank = q;
  f.image.assign(m.size(), UINT32_MAX);
  for (elem_id x : min_ids) {
    f.image[x] = x;
  }
  if (q > z) {
    for (elem_id x = 0; x < m.size(); ++x) {
      if (m.rank_of(x) <= z || m.rank_of(x) > q) {
        continue;
      }
      // Any retraction g satisfies u g(x) = u x and g(x) u = x u for every u
      // in the minimal ideal, which pins g(x) down to at most one candidate.
      elem_id candidate = UINT32_MAX;
      for (elem_id u : min_ids) {
        bool ok = true;
        for (elem_id v : min_ids) {
          if (m.product(v, u) != m.product(v, x)
              || m.product(u, v) != m.product(x, v)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          if (candidate != UINT32_MAX) {
            throw std::logic_error("retraction: non-unique candidate; minimal "
                                   "ideal is not a rectangular band");
          }
          candidate = u;
        }
      }
      if (candidate == UINT32_MAX) {
        return std::nullopt;
      }
      f.image[x] = candidate;
    }
  }
  auto const ids = ideal(m, q);
  for (elem_id x : ids) {
    for (elem_id y : ids) {
      if (f.image[m.product(x, y)] != m.product(f.image[x], f.image[y])) {
        return std::nullopt;
      }
    }
  }
  return f;
}

std::vector<std::pair<elem_id, elem_id>> nu_fast(
    Monoid const& m, NormalSubgroupSpec const& spec) {
  validate_subgroup_spec(spec);
  if (spec.kind != NSKind::Trivial && h_trivial(m.family())) {
    throw std::invalid_argument(
        "nu: nontrivial subgroup spec on an H-trivial family");
  }
  auto jq = j_class(m, spec.q);
  if (jq.empty()) {
    throw std::invalid_argument("nu: rank " + std::to_string(spec.q)
                                + " does not occur");
  }
  std::vector<std::pair<elem_id, elem_id>> out;
  for (elem_id x : jq) {
    out.emplace_back(x, x);
  }
  if (spec.kind != NSKind::Trivial) {
    GreenStructure g = green(m);
    std::map<uint32_t, std::vector<elem_id>> h_classes;
    for (elem_id x : jq) {
      h_classes[g.h[x]].push_back(x);
    }
    for (auto const& [_, cls] : h_classes) {
      for (size_t i = 0; i < cls.size(); ++i) {
        for (size_t j = i + 1; j < cls.size(); ++j) {
          if (perm_in_subgroup(phi(m.at(cls[i]), m.at(cls[j])), spec.kind)) {
            out.emplace_back(cls[i], cls[j]);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<elem_id, elem_id>> nu_oracle(
    Monoid const& m, NormalSubgroupSpec const& spec) {
  validate_subgroup_spec(spec);
  int const q = spec.q;
  std::vector<elem_id> nbar;
  for (Permutation const& p : subgroup_elements(q, spec.kind)) {
    nbar.push_back(m.id_of(sigma_bar(m.family(), m.degree(), p)));
  }
  std::set<std::pair<elem_id, elem_id>> out;
  for (elem_id s = 0; s < m.size(); ++s) {
    std::vector<elem_id> sx(nbar.size());
    for (size_t i = 0; i < nbar.size(); ++i) {
      sx[i] = m.product(s, nbar[i]);
    }
    for (elem_id t = 0; t < m.size(); ++t) {
      for (size_t i = 0; i < nbar.size(); ++i) {
        elem_id u = m.product(sx[i], t);
        if (m.rank_of(u) != q) {
          continue;
        }
        for (size_t j = i; j < nbar.size(); ++j) {
          elem_id v = m.product(sx[j], t);
          if (m.rank_of(v) == q) {
            out.emplace(std::min(u, v), std::max(u, v));
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

INPair make_in_pair(Monoid const& m, int ideal_rank,
                    NormalSubgroupSpec const& spec, std::string tag) {
  validate_subgroup_spec(spec);
  if (!rank_occurs(m, ideal_rank)) {
    throw std::invalid_argument("in_pair: ideal rank does not occur");
  }
  // The J-class hosting N must be the minimal one above the ideal.
  int group_rank = -1;
  for (int q = ideal_rank + 1; q <= m.degree(); ++q) {
    if (rank_occurs(m, q)) {
      group_rank = q;
      break;
    }
  }
  if (group_rank != spec.q) {
    throw std::invalid_argument(
        "in_pair: subgroup rank " + std::to_string(spec.q)
        + " is not the minimal J-class above the rank-"
        + std::to_string(ideal_rank) + " ideal");
  }
  if (spec.kind != NSKind::Trivial) {
    auto g = maximal_subgroup(m, group_rank);
    uint64_t fact = 1;
    for (int i = 2; i <= group_rank; ++i) {
      fact *= i;
    }
    if (g.ids.size() != fact) {
      throw std::invalid_argument(
          "in_pair: maximal subgroup does not support the spec");
    }
  }
  INPair pair{ideal_rank, group_rank, spec, false, std::move(tag)};
  if (auto f = retraction(m, ideal_rank)) {
    pair.retractable = true;
    if (spec.kind != NSKind::Trivial) {
      std::vector<elem_id> nbar;
      for (Permutation const& p : subgroup_elements(spec.q, spec.kind)) {
        nbar.push_back(m.id_of(sigma_bar(m.family(), m.degree(), p)));
      }
      for (elem_id x : ideal(m, minimal_rank(m))) {
        std::set<elem_id> xn, nx;
        for (elem_id g : nbar) {
          xn.insert(m.product(x, g));
          nx.insert(m.product(g, x));
        }
        if (xn.size() != 1 || nx.size() != 1) {
          pair.retractable = false;
          break;
        }
      }
    }
  }
  return pair;
}

INPairCongruences in_pair_congruences(Monoid const& m, INPair const& pair,
                                      bool require_retractable) {
  if (require_retractable && !pair.retractable) {
    throw std::invalid_argument(
        "in_pair_congruences: lam/rho/mu/eta need a retractable pair");
  }
  auto nu = nu_fast(m, pair.nsub);

  INPairCongruences out;
  {
    Dsu dsu(m.size());
    elem_id first = UINT32_MAX;
    for (elem_id x = 0; x < m.size(); ++x) {
      if (m.rank_of(x) <= pair.ideal_rank) {
        if (first == UINT32_MAX) {
          first = x;
        }
        dsu.unite(x, first);
      }
    }
    for (auto const& [x, y] : nu) {
      dsu.unite(x, y);
    }
    out.r = congruence_from_dsu(m, dsu);
  }
  if (!pair.retractable) {
    return out;
  }

  auto           f = retraction(m, pair.ideal_rank);
  GreenStructure g = green(m);
  auto build = [&](std::vector<uint32_t> const& key_of) {
    Dsu dsu(m.size());
    std::map<uint32_t, elem_id> first;
    for (elem_id x = 0; x < m.size(); ++x) {
      if (m.rank_of(x) > pair.ideal_rank) {
        continue;
      }
      uint32_t key  = key_of[f->image[x]];
      auto [it, ok] = first.emplace(key, x);
      if (!ok) {
        dsu.unite(x, it->second);
      }
    }
    for (auto const& [x, y] : nu) {
      dsu.unite(x, y);
    }
    return congruence_from_dsu(m, dsu);
  };
  std::vector<uint32_t> identity_key(m.size());
  std::iota(identity_key.begin(), identity_key.end(), 0);
  out.lam = build(g.l);
  out.rho = build(g.r);
  out.mu  = build(g.h);
  out.eta = build(identity_key);
  return out;
}

bool liftable_check(Monoid const& m,
                    std::vector<elem_id> const& minimal_ideal_ids,
                    std::vector<uint32_t> const& cls) {
  if (cls.size() != minimal_ideal_ids.size()) {
    throw std::invalid_argument("liftable_check: partition size mismatch");
  }
  std::vector<uint32_t> cls_of(m.size(), UINT32_MAX);
  for (size_t i = 0; i < minimal_ideal_ids.size(); ++i) {
    cls_of[minimal_ideal_ids[i]] = cls[i];
  }
  for (size_t i = 0; i < minimal_ideal_ids.size(); ++i) {
    for (size_t j = i + 1; j < minimal_ideal_ids.size(); ++j) {
      if (cls[i] != cls[j]) {
        continue;
      }
      elem_id x = minimal_ideal_ids[i], y = minimal_ideal_ids[j];
      for (elem_id s = 0; s < m.size(); ++s) {
        if (cls_of[m.product(x, s)] != cls_of[m.product(y, s)]
            || cls_of[m.product(s, x)] != cls_of[m.product(s, y)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<INPair> retractable_in_pairs(Monoid const& m) {
  Family const f = m.family();
  int const    n = m.degree();
  std::vector<INPair> out;
  auto add = [&](int ideal_rank, int q, NSKind kind, std::string tag) {
    out.push_back(make_in_pair(m, ideal_rank, {q, kind}, std::move(tag)));
    if (!out.back().retractable) {
      throw std::logic_error("expected retractable IN-pair " + out.back().tag
                             + " on " + to_string(f) + "_" + std::to_string(n));
    }
  };
  switch (f) {
    case Family::P:
    case Family::PB:
      add(0, 1, NSKind::Trivial, "0");
      add(1, 2, NSKind::Trivial, "1");
      add(1, 2, NSKind::Symmetric, "S_2");
      break;
    case Family::PP:
    case Family::M:
      add(0, 1, NSKind::Trivial, "0");
      add(1, 2, NSKind::Trivial, "1");
      break;
    case Family::B:
      if (n % 2 == 1) {
        add(1, 3, NSKind::Trivial, "1");
      } else {
        add(0, 2, NSKind::Trivial, "0");
        add(0, 2, NSKind::Symmetric, "S_2");
        add(2, 4, NSKind::Trivial, "2");
        add(2, 4, NSKind::Klein, "K");
      }
      break;
    case Family::J:
      if (n % 2 == 1) {
        add(1, 3, NSKind::Trivial, "1");
      } else {
        add(0, 2, NSKind::Trivial, "0");
        add(2, 4, NSKind::Trivial, "2");
      }
      break;
    case Family::I:
    case Family::O:
    case Family::S:
      break;
  }
  return out;
}

void check_classification_range(Family f, int n) {
  switch (f) {
    case Family::P:
    case Family::PB:
    case Family::PP:
    case Family::M:
      if (n < 2) {
        throw std::invalid_argument("no prediction: the " + to_string(f)
                                    + " classification assumes degree >= 2");
      }
      return;
    case Family::B:
    case Family::J:
      if (n < 3) {
        throw std::invalid_argument("no prediction: the " + to_string(f)
                                    + " classification assumes degree >= 3");
      }
      return;
    case Family::I:
    case Family::O:
      if (n < 1) {
        throw std::invalid_argument("no prediction: degree must be >= 1");
      }
      return;
    case Family::S:
      throw std::invalid_argument(
          "no prediction: the symmetric group lattice (normal subgroups) is "
          "not part of the catalog");
  }
}

int LabeledLattice::node_with_label(CongruenceLabel const& l) const {
  for (size_t i = 0; i < names.size(); ++i) {
    for (auto const& name : names[i]) {
      if (name == l) {
        return static_cast<int>(i);
      }
    }
  }
  return -1;
}

std::string LabeledLattice::name(int i) const {
  std::string s;
  for (auto const& l : names[i]) {
    if (!s.empty()) {
      s += "=";
    }
    s += l.str();
  }
  return s;
}

namespace {

// Shared by the concrete and symbolic constructions: the labeled node set of
// the classification for a family at degree n.
struct AbstractNode {
  // ideal_rank, subgroup kind at the next rank up, and the part of the
  // minimal-ideal Green relation used: 0 = H (mu), 1 = L (lam), 2 = R (rho),
  // 3 = all (the R_C member).
  int    ideal_rank;
  NSKind kind;
  int    xi;
  std::vector<CongruenceLabel> labels;
};

std::vector<AbstractNode> abstract_nodes(Family f, int n) {
  check_classification_range(f, n);
  int const step = rank_step(f);
  int const z    = (f == Family::B || f == Family::J) ? n % 2 : 0;
  std::vector<AbstractNode> nodes;
  auto find_or_add = [&nodes](int ideal_rank, NSKind kind,
                              int xi) -> AbstractNode& {
    for (auto& node : nodes) {
      if (node.ideal_rank == ideal_rank && node.kind == kind
          && node.xi == xi) {
        return node;
      }
    }
    nodes.push_back({ideal_rank, kind, xi, {}});
    return nodes.back();
  };
  bool const singleton_min = f == Family::I || f == Family::O;

  // Delta: mu of the bottom retractable pair, except over a singleton
  // minimal ideal where it coincides with the Rees congruence R_z.
  find_or_add(z, NSKind::Trivial, singleton_min ? 3 : 0)
      .labels.push_back({CongruenceLabel::Delta, ""});
  // Rees chain.
  for (int q = z; q <= n; q += step) {
    find_or_add(q, NSKind::Trivial, 3)
        .labels.push_back({CongruenceLabel::Rees, std::to_string(q)});
  }
  find_or_add(n, NSKind::Trivial, 3)
      .labels.push_back({CongruenceLabel::Nabla, ""});
  // R_N wick.
  if (f == Family::P || f == Family::PB || f == Family::I || f == Family::B) {
    int first = f == Family::B ? z + 2 : 2;
    for (int q = first; q <= n; q += step) {
      for (NSKind kind : proper_subgroup_kinds(q)) {
        find_or_add(q - step, kind, 3)
            .labels.push_back({CongruenceLabel::RN, nskind_tag(kind, q)});
      }
    }
  }
  // lam/rho/mu prisms from the retractable pairs.
  auto add_prism = [&](int ideal_rank, NSKind kind, std::string const& tag) {
    find_or_add(ideal_rank, kind, 0)
        .labels.push_back({CongruenceLabel::Mu, tag});
    find_or_add(ideal_rank, kind, 1)
        .labels.push_back({CongruenceLabel::Lam, tag});
    find_or_add(ideal_rank, kind, 2)
        .labels.push_back({CongruenceLabel::Rho, tag});
  };
  switch (f) {
    case Family::P:
    case Family::PB:
      add_prism(0, NSKind::Trivial, "0");
      add_prism(1, NSKind::Trivial, "1");
      add_prism(1, NSKind::Symmetric, "S_2");
      break;
    case Family::PP:
    case Family::M:
      add_prism(0, NSKind::Trivial, "0");
      add_prism(1, NSKind::Trivial, "1");
      break;
    case Family::B:
      if (n % 2 == 1) {
        add_prism(1, NSKind::Trivial, "1");
      } else {
        add_prism(0, NSKind::Trivial, "0");
        add_prism(0, NSKind::Symmetric, "S_2");
        add_prism(2, NSKind::Trivial, "2");
        add_prism(2, NSKind::Klein, "K");
      }
      break;
    case Family::J:
      if (n % 2 == 1) {
        add_prism(1, NSKind::Trivial, "1");
      } else {
        add_prism(0, NSKind::Trivial, "0");
        add_prism(2, NSKind::Trivial, "2");
      }
      break;
    default:
      break;
  }
  for (auto& node : nodes) {
    std::sort(node.labels.begin(), node.labels.end());
  }
  return nodes;
}

// The containment order of the named congruences, decidable from the node
// parameters alone: the retraction part needs ideal containment and a finer
// Green relation, the nu part needs the subgroup's J-class to fall into the
// larger ideal (or a larger subgroup over the same ideal).
bool abstract_leq(Family f, AbstractNode const& a, AbstractNode const& b) {
  int const step = rank_step(f);
  auto xi_leq = [](int x, int y) {
    if (x == y || y == 3) {
      return true;
    }
    return x == 0 && (y == 1 || y == 2);
  };
  auto kind_leq = [](NSKind x, NSKind y) {
    auto level = [](NSKind k) {
      switch (k) {
        case NSKind::Trivial: return 0;
        case NSKind::Klein: return 1;
        case NSKind::Alternating: return 2;
        case NSKind::Symmetric: return 3;
      }
      return 0;
    };
    return level(x) <= level(y);
  };
  if (a.ideal_rank > b.ideal_rank || !xi_leq(a.xi, b.xi)) {
    return false;
  }
  if (a.kind == NSKind::Trivial) {
    return true;
  }
  if (a.ideal_rank + step <= b.ideal_rank) {
    return true;
  }
  return a.ideal_rank == b.ideal_rank && kind_leq(a.kind, b.kind);
}

}  // namespace

LabeledLattice predicted_lattice(Monoid const& m) {
  auto abstract = abstract_nodes(m.family(), m.degree());

  // Materialize one congruence per distinct (ideal_rank, kind) pair family.
  std::map<std::pair<int, int>, INPairCongruences> materialized;
  auto get = [&](int ideal_rank, NSKind kind) -> INPairCongruences& {
    auto key = std::make_pair(ideal_rank, static_cast<int>(kind));
    auto it  = materialized.find(key);
    if (it == materialized.end()) {
      int group_rank = -1;
      for (int q = ideal_rank + 1; q <= m.degree(); ++q) {
        if (rank_occurs(m, q)) {
          group_rank = q;
          break;
        }
      }
      INPair pair{ideal_rank, group_rank, {group_rank, kind}, false, ""};
      if (ideal_rank == m.degree() || group_rank == -1) {
        // Top of the chain: R_n, no J-class above.
        INPairCongruences c;
        c.r = rees(m, ideal_rank);
        it  = materialized.emplace(key, std::move(c)).first;
      } else {
        pair = make_in_pair(m, ideal_rank, {group_rank, kind}, "");
        it   = materialized.emplace(key, in_pair_congruences(m, pair)).first;
      }
    }
    return it->second;
  };

  std::vector<std::pair<Congruence, std::vector<CongruenceLabel>>> nodes;
  for (auto const& node : abstract) {
    INPairCongruences& c = get(node.ideal_rank, node.kind);
    Congruence const*  chosen = nullptr;
    switch (node.xi) {
      case 0: chosen = &*c.mu; break;
      case 1: chosen = &*c.lam; break;
      case 2: chosen = &*c.rho; break;
      case 3: chosen = &c.r; break;
    }
    bool merged = false;
    for (auto& [cong, labels] : nodes) {
      if (cong == *chosen) {
        labels.insert(labels.end(), node.labels.begin(), node.labels.end());
        merged = true;
        break;
      }
    }
    if (!merged) {
      nodes.emplace_back(*chosen, node.labels);
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](auto const& x, auto const& y) {
    return x.first < y.first;
  });

  LabeledLattice out;
  std::vector<Congruence> congruences;
  for (auto& [cong, labels] : nodes) {
    congruences.push_back(cong);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end(),
                             [](auto const& a, auto const& b) {
                               return a == b;
                             }),
                 labels.end());
    out.names.push_back(labels);
  }
  out.lattice = make_lattice(congruences);
  if (out.lattice.congruences.size() != congruences.size()) {
    throw std::logic_error("predicted congruences are not distinct");
  }
  for (size_t i = 0; i < out.names.size(); ++i) {
    out.lattice.labels[i].clear();
    for (auto const& l : out.names[i]) {
      out.lattice.labels[i].push_back(l.str());
    }
  }
  return out;
}

SymbolicLattice predicted_lattice_symbolic(Family f, int n) {
  auto nodes = abstract_nodes(f, n);
  // Deterministic order: by (ideal_rank, xi with mu < lam < rho < R,
  // subgroup level); a linear extension of the containment order.
  std::sort(nodes.begin(), nodes.end(),
            [](AbstractNode const& a, AbstractNode const& b) {
              if (a.ideal_rank != b.ideal_rank) {
                return a.ideal_rank < b.ideal_rank;
              }
              if (a.kind != b.kind) {
                return static_cast<int>(a.kind) < static_cast<int>(b.kind);
              }
              return a.xi < b.xi;
            });
  SymbolicLattice out;
  size_t const    k = nodes.size();
  std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i) {
    out.nodes.push_back(nodes[i].labels);
    for (size_t j = 0; j < k; ++j) {
      le[i][j] = abstract_leq(f, nodes[i], nodes[j]);
    }
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (i == j || !le[i][j]) {
        continue;
      }
      bool cover = true;
      for (size_t t = 0; t < k && cover; ++t) {
        if (t != i && t != j && le[i][t] && le[t][j]) {
          cover = false;
        }
      }
      if (cover) {
        out.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  std::sort(out.hasse.begin(), out.hasse.end());
  return out;
}

std::string SymbolicLattice::name(int i) const {
  std::string s;
  for (auto const& l : nodes[i]) {
    if (!s.empty()) {
      s += "=";
    }
    s += l.str();
  }
  return s;
}

bool predicted_star_compatible(std::vector<CongruenceLabel> const& names) {
  for (auto const& l : names) {
    if (l.kind == CongruenceLabel::Lam || l.kind == CongruenceLabel::Rho) {
      return false;
    }
  }
  return true;
}

namespace {

CongruenceLabel rn_label(int q, Permutation const& p) {
  // Normal closure of a nontrivial permutation in S_q.
  if (q == 4 && p.is_klein()) {
    return {CongruenceLabel::RN, "K"};
  }
  if (q >= 3 && p.is_even()) {
    return {CongruenceLabel::RN, "A_" + std::to_string(q)};
  }
  return {CongruenceLabel::RN, "S_" + std::to_string(q)};
}

bool h_related(DiagramStats const& a, DiagramStats const& b) {
  return a.dom == b.dom && a.ker == b.ker && a.codom == b.codom
         && a.coker == b.coker;
}

}  // namespace

CongruenceLabel classify_pair(Family f, int n, Diagram const& a,
                              Diagram const& b) {
  check_classification_range(f, n);
  if (a.degree() != n || b.degree() != n) {
    throw std::invalid_argument("classify_pair: degree mismatch");
  }
  if (!is_member(a, f) || !is_member(b, f)) {
    throw std::invalid_argument("classify_pair: not members of "
                                + to_string(f) + "_" + std::to_string(n));
  }
  if (a == b) {
    return {CongruenceLabel::Delta, ""};
  }
  Diagram const &hi = rank(a) >= rank(b) ? a : b,
                &lo = rank(a) >= rank(b) ? b : a;
  int const q = rank(hi);
  DiagramStats const sh = stats(hi), sl = stats(lo);
  auto rees_label = [](int r) {
    return CongruenceLabel{CongruenceLabel::Rees, std::to_string(r)};
  };

  switch (f) {
    case Family::P:
    case Family::PB: {
      if (q == 0) {
        if (sh.ker == sl.ker) {
          return {CongruenceLabel::Rho, "0"};
        }
        if (sh.coker == sl.coker) {
          return {CongruenceLabel::Lam, "0"};
        }
        return rees_label(0);
      }
      if (q == 1) {
        Diagram const ha = hat_partition(hi), hb = hat_partition(lo);
        if (ha == hb) {
          return {CongruenceLabel::Mu, "1"};
        }
        if (sh.ker == sl.ker) {
          return {CongruenceLabel::Rho, "1"};
        }
        if (sh.coker == sl.coker) {
          return {CongruenceLabel::Lam, "1"};
        }
        return rees_label(1);
      }
      if (!h_related(sh, sl)) {
        return rees_label(q);
      }
      if (q == 2) {
        return {CongruenceLabel::Mu, "S_2"};
      }
      return rn_label(q, phi(hi, lo));
    }
    case Family::PP:
    case Family::M: {
      if (q == 0) {
        if (sh.ker == sl.ker) {
          return {CongruenceLabel::Rho, "0"};
        }
        if (sh.coker == sl.coker) {
          return {CongruenceLabel::Lam, "0"};
        }
        return rees_label(0);
      }
      if (q == 1) {
        if (hat_partition(hi) == hat_partition(lo)) {
          return {CongruenceLabel::Mu, "1"};
        }
        if (sh.ker == sl.ker) {
          return {CongruenceLabel::Rho, "1"};
        }
        if (sh.coker == sl.coker) {
          return {CongruenceLabel::Lam, "1"};
        }
        return rees_label(1);
      }
      return rees_label(q);
    }
    case Family::B: {
      int const z = n % 2;
      if (q == z) {
        if (sh.ker == sl.ker) {
          return {CongruenceLabel::Rho, std::to_string(z)};
        }
        if (sh.coker == sl.coker) {
          return {CongruenceLabel::Lam, std::to_string(z)};
        }
        return rees_label(z);
      }
      if (q == 2) {
        if (h_related(sh, sl)) {
          return {CongruenceLabel::Mu, "S_2"};
        }
        Diagram const ha = hat_brauer(hi), hb = hat_brauer(lo);
        if (ha == hb) {
          return {CongruenceLabel::Mu, "2"};
        }
        DiagramStats const sha = stats(ha), shb = stats(hb);
        if (sha.ker == shb.ker) {
          return {CongruenceLabel::Rho, "2"};
        }
        if (sha.coker == shb.coker) {
          return {CongruenceLabel::Lam, "2"};
        }
        return rees_label(2);
      }
      if (!h_related(sh, sl)) {
        return rees_label(q);
      }
      Permutation const p = phi(hi, lo);
      if (q == 4 && p.is_klein()) {
        return {CongruenceLabel::Mu, "K"};
      }
      return rn_label(q, p);
    }
    case Family::J: {
      int const z = n % 2;
      if (q == z) {
        if (sh.ker == sl.ker) {
          return {CongruenceLabel::Rho, std::to_string(z)};
        }
        if (sh.coker == sl.coker) {
          return {CongruenceLabel::Lam, std::to_string(z)};
        }
        return rees_label(z);
      }
      if (n % 2 == 0 && q == 2) {
        Diagram const ha = hat_brauer(hi), hb = hat_brauer(lo);
        if (ha == hb) {
          return {CongruenceLabel::Mu, "2"};
        }
        DiagramStats const sha = stats(ha), shb = stats(hb);
        if (sha.ker == shb.ker) {
          return {CongruenceLabel::Rho, "2"};
        }
        if (sha.coker == shb.coker) {
          return {CongruenceLabel::Lam, "2"};
        }
        return rees_label(2);
      }
      return rees_label(q);
    }
    case Family::I: {
      if (h_related(sh, sl) && q >= 2) {
        return rn_label(q, phi(hi, lo));
      }
      return rees_label(q);
    }
    case Family::O:
      return rees_label(q);
    case Family::S:
      break;
  }
  throw std::invalid_argument("classify_pair: unsupported family");
}

Congruence realize_label(Monoid const& m, CongruenceLabel const& label) {
  switch (label.kind) {
    case CongruenceLabel::Delta:
      return Congruence::trivial(m);
    case CongruenceLabel::Nabla:
      return Congruence::universal(m);
    case CongruenceLabel::Rees:
      return rees(m, std::stoi(label.tag));
    case CongruenceLabel::RN: {
      NormalSubgroupSpec spec{};
      if (label.tag == "K") {
        spec = {4, NSKind::Klein};
      } else if (label.tag[0] == 'A') {
        spec = {std::stoi(label.tag.substr(2)), NSKind::Alternating};
      } else {
        spec = {std::stoi(label.tag.substr(2)), NSKind::Symmetric};
      }
      INPair pair = make_in_pair(m, spec.q - rank_step(m.family()), spec, "");
      return in_pair_congruences(m, pair).r;
    }
    case CongruenceLabel::Lam:
    case CongruenceLabel::Rho:
    case CongruenceLabel::Mu:
    case CongruenceLabel::Eta: {
      for (INPair const& pair : retractable_in_pairs(m)) {
        if (pair.tag == label.tag) {
          auto c = in_pair_congruences(m, pair, true);
          switch (label.kind) {
            case CongruenceLabel::Lam: return *c.lam;
            case CongruenceLabel::Rho: return *c.rho;
            case CongruenceLabel::Mu: return *c.mu;
            default: return *c.eta;
          }
        }
      }
      throw std::invalid_argument("realize_label: no retractable IN-pair "
                                  "tagged " + label.tag);
    }
  }
  throw std::invalid_argument("realize_label: bad label");
}

}  // namespace diagcong
