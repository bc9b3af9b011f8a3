#pragma once

// Counter-based deterministic randomness for the verification suites: the
// k-th draw for a given seed is a pure function of (seed, k), independent of
// platform and of how draws are interleaved across suites.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topalg/preorder.hpp"

namespace topalg {

struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t counter = 0;

  std::uint64_t next() {
    std::uint64_t z = (seed + 0x9e3779b97f4a7c15ULL) ^ (++counter * 0xbf58476d1ce4e5b9ULL);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform-ish draw below m (modulo bias is irrelevant here).
  std::uint64_t below(std::uint64_t m) { return m ? next() % m : 0; }
};

// Random preorder on labels prefix+"0"... prefix+(n-1): each off-diagonal
// pair is requested with probability 1/4, then closed.
inline Preorder random_preorder(CounterRng& rng, int n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.below(4) == 0) pairs.emplace_back(labels[i], labels[j]);
  return Preorder::from_relations(labels, pairs);
}

inline Preorder random_connected_preorder(CounterRng& rng, int n,
                                          const std::string& prefix) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Preorder p = random_preorder(rng, n, prefix);
    if (n == 0 || p.connected()) return p;
  }
  // Deterministic fallback (practically unreachable).
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Preorder::chain(labels);
}

// Random bijection from t's labels onto fresh ones prefix+"0"...; the image
// assignment is a Fisher-Yates shuffle.
inline std::map<std::string, std::string> random_relabel_map(
    CounterRng& rng, const Preorder& t, const std::string& prefix) {
  const int n = t.size();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(img[i], img[static_cast<int>(rng.below(i + 1))]);
  std::map<std::string, std::string> phi;
  for (int i = 0; i < n; ++i)
    phi.emplace(t.label(i), prefix + std::to_string(img[i]));
  return phi;
}

}  // namespace topalg
