#pragma once

#include <cmath>
#include <unordered_set>
#include <vector>

#include "advgae/graph.hpp"

namespace advgae {

// Membership structure over node pairs (undirected).
struct EdgeKeySet {
  int n = 0;
  std::unordered_set<std::int64_t> keys;

  explicit EdgeKeySet(int n_nodes) : n(n_nodes) {}
  EdgeKeySet(int n_nodes, const std::vector<Edge>& edges) : n(n_nodes) {
    keys.reserve(edges.size() * 2);
    for (const auto& [i, j] : edges) insert(i, j);
  }
  std::int64_t key(int i, int j) const {
    const auto a = static_cast<std::int64_t>(std::min(i, j));
    const auto b = static_cast<std::int64_t>(std::max(i, j));
    return a * n + b;
  }
  void insert(int i, int j) { keys.insert(key(i, j)); }
  bool contains(int i, int j) const { return keys.count(key(i, j)) > 0; }
};

// Uniform rejection sampling of `count` distinct non-edges (i != j, pair not in
// `exclude`). Gives up after 100 * count draws.
inline std::vector<Edge> sample_negative_edges(int n, int count, const EdgeKeySet& exclude,
                                               std::mt19937_64& rng) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(count));
  EdgeKeySet taken(n);
  std::uniform_int_distribution<int> node(0, n - 1);
  const std::int64_t cap = 100LL * std::max(count, 1);
  std::int64_t attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > cap)
      throw Error("negative sampling exhausted " + std::to_string(cap) + " attempts for " +
                  std::to_string(count) + " samples on " + std::to_string(n) + " nodes");
    const int i = node(rng);
    const int j = node(rng);
    if (i == j || exclude.contains(i, j) || taken.contains(i, j)) continue;
    taken.insert(i, j);
    out.emplace_back(std::min(i, j), std::max(i, j));
  }
  return out;
}

struct EdgeSplit {
  std::vector<Edge> train_pos;
  std::vector<Edge> val_pos;
  std::vector<Edge> test_pos;
  std::vector<Edge> val_neg;
  std::vector<Edge> test_neg;
  std::uint64_t seed = 0;
};

// Random partition of the edge set into train/val/test plus sampled negative
// counterparts for val and test. Deterministic for a fixed seed.
inline EdgeSplit split_edges(const AttributedGraph& g, double train_frac, double val_frac,
                             double test_frac, std::uint64_t seed) {
  require(train_frac > 0 && val_frac > 0 && test_frac > 0, "split fractions must be positive");
  require(std::abs(train_frac + val_frac + test_frac - 1.0) < 1e-9, "split fractions must sum to 1");
  const int m = g.m();
  require(m >= 10, "graph too small to split: " + std::to_string(m) + " edges");

  const int val_count = static_cast<int>(std::floor(static_cast<double>(m) * val_frac + 0.5));
  const int test_count = static_cast<int>(std::floor(static_cast<double>(m) * test_frac + 0.5));
  const int train_count = m - val_count - test_count;
  if (train_count < 1 || val_count < 1 || test_count < 1)
    throw Error("graph too small to populate all splits (m=" + std::to_string(m) + ")");

  std::vector<Edge> shuffled = g.edges;
  auto rng = make_rng(seed, "edge-split");
  std::shuffle(shuffled.begin(), shuffled.end(), rng);

  EdgeSplit split;
  split.seed = seed;
  split.train_pos.assign(shuffled.begin(), shuffled.begin() + train_count);
  split.val_pos.assign(shuffled.begin() + train_count, shuffled.begin() + train_count + val_count);
  split.test_pos.assign(shuffled.begin() + train_count + val_count, shuffled.end());

  const EdgeKeySet all_edges(g.n, g.edges);
  auto neg_rng = make_rng(seed, "split-negatives");
  split.val_neg = sample_negative_edges(g.n, val_count, all_edges, neg_rng);
  // test negatives may not collide with val negatives either
  EdgeKeySet exclude = all_edges;
  for (const auto& [i, j] : split.val_neg) exclude.insert(i, j);
  split.test_neg = sample_negative_edges(g.n, test_count, exclude, neg_rng);
  return split;
}

}  // namespace advgae
