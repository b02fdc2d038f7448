#include "diagcong/monoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "diagcong/maps.hpp"

namespace diagcong {

Monoid::Monoid(Family f, int degree, std::vector<Diagram> elements,
               uint64_t max_table_entries)
    : family_(f), degree_(degree), elements_(std::move(elements)) {
  std::sort(elements_.begin(),
            elements_.end(),
            [](Diagram const& a, Diagram const& b) {
              return a.to_string() < b.to_string();
            });
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  index_.reserve(elements_.size());
  for (elem_id i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
  }
  identity_id_ = id_of(Diagram::identity(degree_));
  star_.resize(elements_.size());
  rank_.resize(elements_.size());
  for (elem_id i = 0; i < elements_.size(); ++i) {
    star_[i] = id_of(star(elements_[i]));
    rank_[i] = rank(elements_[i]);
  }
  uint64_t const n = elements_.size();
  if (n * n <= max_table_entries) {
    table_.resize(n * n);
    for (elem_id a = 0; a < n; ++a) {
      for (elem_id b = 0; b < n; ++b) {
        table_[a * n + b] = id_of(multiply(elements_[a], elements_[b]));
      }
    }
  } else {
    memo_ = std::make_unique<Memo>();
  }
}

bool Monoid::contains(Diagram const& d) const {
  return index_.count(d) > 0;
}

elem_id Monoid::id_of(Diagram const& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) {
    throw std::invalid_argument("element not in monoid: " + d.to_string());
  }
  return it->second;
}

elem_id Monoid::product(elem_id a, elem_id b) const {
  if (!table_.empty()) {
    return table_[static_cast<uint64_t>(a) * elements_.size() + b];
  }
  uint64_t key = (static_cast<uint64_t>(a) << 32) | b;
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto                        it = memo_->map.find(key);
    if (it != memo_->map.end()) {
      return it->second;
    }
  }
  elem_id r = id_of(multiply(elements_[a], elements_[b]));
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->map.emplace(key, r);
  return r;
}

namespace {

// Closed-form element counts used only to refuse oversized enumerations
// early; for the Motzkin monoid (no closed form used here) the involution
// count of the ambient partial Brauer monoid is an upper bound.
uint64_t guard_count(Family f, int n) {
  auto bell = [](int k) {
    std::vector<std::vector<uint64_t>> tri(1, {1});
    for (int i = 1; i <= k; ++i) {
      std::vector<uint64_t> row(1, tri.back().back());
      for (uint64_t x : tri.back()) {
        row.push_back(row.back() + x);
      }
      tri.push_back(std::move(row));
    }
    return tri[k][0];
  };
  auto involutions = [](int k) {
    uint64_t a = 1, b = 1;  // t(0), t(1)
    for (int i = 2; i <= k; ++i) {
      uint64_t c = b + static_cast<uint64_t>(i - 1) * a;
      a          = b;
      b          = c;
    }
    return k == 0 ? a : b;
  };
  auto catalan = [](int k) {
    uint64_t c = 1;
    for (int i = 0; i < k; ++i) {
      c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
  };
  auto binom = [](int a, int b) {
    uint64_t r = 1;
    for (int i = 1; i <= b; ++i) {
      r = r * (a - b + i) / i;
    }
    return r;
  };
  switch (f) {
    case Family::P: return bell(2 * n);
    case Family::PB: return involutions(2 * n);
    case Family::M: return involutions(2 * n);  // upper bound
    case Family::B: {
      uint64_t r = 1;
      for (int i = 3; i <= 2 * n - 1; i += 2) {
        r *= i;
      }
      return r;
    }
    case Family::PP: return catalan(2 * n);
    case Family::J: return catalan(n);
    case Family::I: {
      uint64_t total = 0;
      for (int k = 0; k <= n; ++k) {
        uint64_t c = binom(n, k), fact = 1;
        for (int i = 2; i <= k; ++i) {
          fact *= i;
        }
        total += c * c * fact;
      }
      return total;
    }
    case Family::O: return binom(2 * n, n);
    case Family::S: {
      uint64_t r = 1;
      for (int i = 2; i <= n; ++i) {
        r *= i;
      }
      return r;
    }
  }
  return 0;
}

struct RgsGenerator {
  Family                             family;
  int                                n;
  uint64_t                           max_elements;
  std::vector<std::vector<vertex_t>> blocks;
  std::vector<Diagram>               out;
  size_t                             max_block;

  void run() {
    max_block = blocks_at_most_two(family) ? 2 : SIZE_MAX;
    recurse(0);
  }

  void recurse(int key) {
    if (key == 2 * n) {
      Diagram d = from_canonical_blocks(n, blocks);
      if (is_member(d, family)) {
        if (out.size() >= max_elements) {
          throw std::length_error(
              "enumerate: size guard of " + std::to_string(max_elements)
              + " elements exceeded for " + to_string(family) + "_"
              + std::to_string(n));
        }
        out.push_back(std::move(d));
      }
      return;
    }
    vertex_t v = vertex_of_key(key, n);
    // Deeper recursion appends new blocks; index, do not hold references.
    size_t const existing = blocks.size();
    for (size_t bi = 0; bi < existing; ++bi) {
      if (blocks[bi].size() >= max_block) {
        continue;
      }
      // For I/O/S a 2-block must be a transversal; for S no singletons may
      // remain, which the final is_member filter settles.
      if ((family == Family::I || family == Family::O || family == Family::S)
          && (blocks[bi][0] > 0) == (v > 0)) {
        continue;
      }
      blocks[bi].push_back(v);
      recurse(key + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({v});
    recurse(key + 1);
    blocks.pop_back();
  }
};

}  // namespace

Monoid enumerate(Family f, int n, uint64_t max_elements,
                 uint64_t max_table_entries) {
  if (n < 1) {
    throw std::invalid_argument("enumerate: degree must be >= 1");
  }
  // The generator walks the whole pruned candidate tree even when few
  // members survive the filter; refuse when that walk is hopeless.
  constexpr uint64_t kMaxCandidates = 200'000'000;
  uint64_t           candidates     = UINT64_MAX;  // 2n > 24 overflows Bell
  if (2 * n <= 24) {
    switch (f) {
      case Family::P:
      case Family::PP: candidates = guard_count(Family::P, n); break;
      case Family::I:
      case Family::O:
      case Family::S: candidates = guard_count(Family::I, n); break;
      default: candidates = guard_count(Family::PB, n); break;
    }
  }
  if (candidates > kMaxCandidates) {
    throw std::length_error("enumerate: candidate space for " + to_string(f)
                            + "_" + std::to_string(n)
                            + " is too large to walk");
  }
  uint64_t expected = guard_count(f, n);
  if (f != Family::M && expected > max_elements) {
    throw std::length_error("enumerate: size guard of "
                            + std::to_string(max_elements)
                            + " elements exceeded for " + to_string(f) + "_"
                            + std::to_string(n) + " (" + std::to_string(expected)
                            + " elements)");
  }
  RgsGenerator gen{f, n, max_elements, {}, {}, 0};
  gen.out.reserve(expected <= max_elements ? expected : 0);
  gen.run();
  return Monoid(f, n, std::move(gen.out), max_table_entries);
}

Diagram canonical_idempotent(Family f, int n, int q) {
  std::vector<std::vector<vertex_t>> blocks;
  for (int i = 1; i <= q; ++i) {
    blocks.push_back({i, -i});
  }
  if (f == Family::B || f == Family::J) {
    if ((n - q) % 2 != 0) {
      throw std::invalid_argument("canonical_idempotent: rank parity mismatch");
    }
    for (int i = q + 1; i < n; i += 2) {
      blocks.push_back({i, i + 1});
      blocks.push_back({-i, -(i + 1)});
    }
  } else {
    for (int i = q + 1; i <= n; ++i) {
      blocks.push_back({i});
      blocks.push_back({-i});
    }
  }
  return Diagram::make(n, std::move(blocks));
}

Diagram sigma_bar(Family f, int n, Permutation const& sigma) {
  int q = sigma.degree();
  std::vector<std::vector<vertex_t>> blocks;
  for (int i = 1; i <= q; ++i) {
    blocks.push_back({i, -sigma(i)});
  }
  if (f == Family::B || f == Family::J) {
    if ((n - q) % 2 != 0) {
      throw std::invalid_argument("sigma_bar: rank parity mismatch");
    }
    for (int i = q + 1; i < n; i += 2) {
      blocks.push_back({i, i + 1});
      blocks.push_back({-i, -(i + 1)});
    }
  } else {
    for (int i = q + 1; i <= n; ++i) {
      blocks.push_back({i});
      blocks.push_back({-i});
    }
  }
  return Diagram::make(n, std::move(blocks));
}

}  // namespace diagcong
