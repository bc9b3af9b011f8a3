#include "topalg/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

namespace topalg {

namespace {

// ---------------------------------------------------------------------------
// Vertex refinement: colour vertices by label-independent invariants, then
// iterate "colour of my strict up/down neighbourhood" until stable.

std::vector<int> class_heights(const Preorder& t) {
  // Height of each vertex's equivalence class in the condensation
  // (longest strictly increasing chain of classes below it).
  const int n = t.size();
  std::vector<int> height(n, 0);
  // Repeated relaxation is fine at n <= 12.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (t.leq(j, i) && !t.leq(i, j) && height[j] + 1 > height[i]) {
          height[i] = height[j] + 1;
          changed = true;
        }
      }
    }
  }
  return height;
}

std::vector<int> refine_colors(const Preorder& t) {
  const int n = t.size();
  const auto heights = class_heights(t);
  std::vector<int> class_size(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.equiv(i, j)) ++class_size[i];

  using Sig = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
  std::vector<int> color(n);
  {
    std::vector<std::tuple<int, int, int, int>> init(n);
    std::vector<std::tuple<int, int, int, int>> sorted;
    for (int i = 0; i < n; ++i) {
      init[i] = {class_size[i], heights[i], popcount(t.up_set(i)),
                 popcount(t.down_set(i))};
      sorted.push_back(init[i]);
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < n; ++i)
      color[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), init[i]) - sorted.begin());
  }

  for (;;) {
    std::vector<Sig> sig(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> ups, downs;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (t.leq(i, j)) ups.push_back(color[j]);
        if (t.leq(j, i)) downs.push_back(color[j]);
      }
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig[i] = {std::vector<int>{color[i]}, std::move(ups), std::move(downs)};
    }
    std::vector<Sig> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i)
      next[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    if (next == color) break;
    color = next;
  }
  return color;
}

// ---------------------------------------------------------------------------
// Backtracking over colour-respecting permutations.

struct CanonResult {
  std::vector<Mask> rows;        // canonical matrix, MSB-packed rows
  std::uint64_t aut_order = 0;   // number of minimizing permutations
  std::vector<int> orbit_of;     // union-find representative per vertex
  std::vector<int> first_perm;   // vertex -> canonical position (one minimizer)
};

struct UnionFind {
  std::vector<int> parent;
  void reset(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Rows are packed with bit q of row p stored at position (63 - q), so that
// numeric comparison of the row vector is lexicographic comparison of the
// matrix read row-major.
std::vector<Mask> leaf_matrix(const Preorder& t, const std::vector<int>& pos2orig) {
  const int n = t.size();
  std::vector<Mask> rows(n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (t.leq(pos2orig[p], pos2orig[q])) rows[p] |= Mask{1} << (63 - q);
  return rows;
}

CanonResult canonical_search(const Preorder& t, int limit) {
  const int n = t.size();
  if (limit > kCanonLimitMax) limit = kCanonLimitMax;
  if (n > limit)
    throw size_limit_error("canonicalization limited to " + std::to_string(limit) +
                           " points");

  CanonResult res;
  if (n == 0) {
    res.aut_order = 1;
    return res;
  }

  const auto color = refine_colors(t);
  // Vertices ordered by (colour, original index); positions are filled in
  // this cell order, permuting only within cells.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return color[a] < color[b]; });

  std::vector<int> pos2orig(n, -1);
  std::vector<bool> used(n, false);
  UnionFind uf;
  uf.reset(n);
  bool have_best = false;
  std::vector<Mask> best;
  std::vector<int> best_pos_of(n);  // orig -> position for first minimizer

  auto at_leaf = [&]() {
    auto rows = leaf_matrix(t, pos2orig);
    if (!have_best || rows < best) {
      have_best = true;
      best = rows;
      res.aut_order = 1;
      uf.reset(n);
      for (int p = 0; p < n; ++p) best_pos_of[pos2orig[p]] = p;
    } else if (rows == best) {
      ++res.aut_order;
      // This permutation composed with the first minimizer's inverse is an
      // automorphism of t.
      for (int i = 0; i < n; ++i) uf.unite(i, pos2orig[best_pos_of[i]]);
    }
  };

  auto rec = [&](auto&& self, int p) -> void {
    if (p == n) {
      at_leaf();
      return;
    }
    // Candidates for position p: unused vertices of the cell that owns this
    // position (cells are contiguous in `order`).
    const int cell_color = color[order[p]];
    for (int k = 0; k < n; ++k) {
      const int v = order[k];
      if (used[v] || color[v] != cell_color) continue;
      used[v] = true;
      pos2orig[p] = v;
      self(self, p + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);

  res.rows = std::move(best);
  res.orbit_of.resize(n);
  for (int i = 0; i < n; ++i) res.orbit_of[i] = uf.find(i);
  res.first_perm = std::move(best_pos_of);
  return res;
}

// Memoized by value; single-threaded access pattern (thread_local for safety).
const CanonResult& canon_cached(const Preorder& t, int limit) {
  thread_local std::map<std::string, CanonResult> cache;
  const std::string key = t.to_text();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() > 200000) cache.clear();
  return cache.emplace(key, canonical_search(t, limit)).first->second;
}

std::string canon_label(int i, int n) {
  std::string s = std::to_string(i);
  const std::string width = std::to_string(n - 1);
  while (s.size() < width.size()) s.insert(s.begin(), '0');
  return s;
}

bool rows_transitive_raw(const std::vector<Mask>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    for (Mask m = rows[i]; m; m &= m - 1) {
      const int j = std::countr_zero(m);
      if ((rows[j] & ~rows[i]) != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::string canonical_key(const Preorder& t, int limit) {
  const auto& c = canon_cached(t, limit);
  const int n = t.size();
  std::string key = std::to_string(n) + "|";
  bool first = true;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      if ((c.rows[p] >> (63 - q)) & 1u) {
        if (!first) key += ",";
        key += std::to_string(p) + "<" + std::to_string(q);
        first = false;
      }
    }
  }
  return key;
}

Preorder canonical_form(const Preorder& t, int limit) {
  const auto& c = canon_cached(t, limit);
  const int n = t.size();
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int p = 0; p < n; ++p) labels.push_back(canon_label(p, n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q && ((c.rows[p] >> (63 - q)) & 1u))
        pairs.emplace_back(canon_label(p, n), canon_label(q, n));
  return Preorder::from_relations(std::move(labels), pairs);
}

AutomorphismInfo automorphisms(const Preorder& t, int limit) {
  const auto& c = canon_cached(t, limit);
  AutomorphismInfo info;
  info.order = c.aut_order;
  std::vector<Mask> orbits;
  Mask seen = 0;
  for (int i = 0; i < t.size(); ++i) {
    if ((seen >> i) & 1u) continue;
    Mask orb = 0;
    for (int j = 0; j < t.size(); ++j)
      if (c.orbit_of[j] == c.orbit_of[i]) orb |= Mask{1} << j;
    orbits.push_back(orb);
    seen |= orb;
  }
  info.orbits = std::move(orbits);
  return info;
}

Int sigma(const Preorder& t, int limit) {
  return Int(canon_cached(t, limit).aut_order);
}

bool homeomorphic(const Preorder& a, const Preorder& b, int limit) {
  if (a.size() != b.size()) return false;
  return canonical_key(a, limit) == canonical_key(b, limit);
}

Int eval_functional(const Preorder& ref, const Preorder& t, EvalMode mode) {
  switch (mode) {
    case EvalMode::UpToHomeo:
      return homeomorphic(ref, t) ? sigma(ref) : Int(0);
    case EvalMode::StrictLabelled:
      return ref == t ? sigma(ref) : Int(0);
  }
  return 0;
}

namespace {

std::vector<Preorder> build_labeled(int n);

const std::vector<Preorder>& labeled_cache(int n) {
  static std::map<int, std::vector<Preorder>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_labeled(n)).first;
  return it->second;
}

std::vector<Preorder> build_labeled(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Preorder> out;
  if (n == 0) {
    out.push_back(Preorder());
    return out;
  }
  if (n <= 4) {
    // Every off-diagonal bit pattern, kept when reflexive closure is already
    // transitive.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    const int bits = static_cast<int>(slots.size());
    for (std::uint32_t pat = 0; pat < (1u << bits); ++pat) {
      std::vector<Mask> rows(n, 0);
      for (int i = 0; i < n; ++i) rows[i] |= Mask{1} << i;
      for (int b = 0; b < bits; ++b)
        if ((pat >> b) & 1u) rows[slots[b].first] |= Mask{1} << slots[b].second;
      if (!rows_transitive_raw(rows)) continue;
      std::vector<std::pair<std::string, std::string>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && ((rows[i] >> j) & 1u))
            pairs.emplace_back(labels[i], labels[j]);
      out.push_back(Preorder::from_relations(labels, pairs));
    }
    return out;
  }
  if (n == 5) {
    // Extend each 4-point topology by the new point "4" with every up/down
    // pattern that stays transitive.  Restriction to the first four points
    // inverts the construction, so each 5-point topology appears once.
    const auto& base = labeled_cache(4);
    for (const auto& t4 : base) {
      for (std::uint32_t down = 0; down < 16; ++down) {
        for (std::uint32_t up = 0; up < 16; ++up) {
          std::vector<Mask> rows(5, 0);
          for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j)
              if (t4.leq(i, j)) rows[i] |= Mask{1} << j;
          }
          for (int i = 0; i < 5; ++i) rows[i] |= Mask{1} << i;
          for (int i = 0; i < 4; ++i) {
            if ((down >> i) & 1u) rows[i] |= Mask{1} << 4;  // i <= new point
            if ((up >> i) & 1u) rows[4] |= Mask{1} << i;    // new point <= i
          }
          if (!rows_transitive_raw(rows)) continue;
          std::vector<std::pair<std::string, std::string>> pairs;
          for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
              if (i != j && ((rows[i] >> j) & 1u))
                pairs.emplace_back(labels[i], labels[j]);
          out.push_back(Preorder::from_relations(labels, pairs));
        }
      }
    }
    return out;
  }
  throw size_limit_error("labeled enumeration limited to 5 points");
}

}  // namespace

const std::vector<Preorder>& enumerate_labeled(int n) { return labeled_cache(n); }

const std::vector<Preorder>& enumerate_unlabeled(int n) {
  static std::map<int, std::vector<Preorder>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::map<std::string, Preorder> reps;
    for (const auto& t : enumerate_labeled(n)) {
      std::string key = canonical_key(t);
      if (!reps.count(key)) reps.emplace(std::move(key), canonical_form(t));
    }
    std::vector<Preorder> out;
    out.reserve(reps.size());
    for (auto& [key, rep] : reps) out.push_back(rep);
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

}  // namespace topalg
