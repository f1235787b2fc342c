#pragma once

#include <utility>
#include <vector>

#include "advgae/core.hpp"
#include "advgae/sparse.hpp"

namespace advgae {

using Edge = std::pair<int, int>;

// Undirected attributed graph. Edges are stored once with i < j, sorted and
// de-duplicated; the adjacency matrix is derived symmetrically.
struct AttributedGraph {
  int n = 0;
  std::vector<Edge> edges;
  Dense X;                                  // n x d attribute matrix
  std::vector<int> labels;                  // empty, or one class id per node
  std::vector<std::uint8_t> anomaly_flags;  // empty, or one flag per node

  int m() const { return static_cast<int>(edges.size()); }
  int d() const { return static_cast<int>(X.cols()); }
  bool has_labels() const { return !labels.empty(); }
  bool has_anomaly_flags() const { return !anomaly_flags.empty(); }

  int num_classes() const {
    int c = 0;
    for (int l : labels) c = std::max(c, l + 1);
    return c;
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [i, j] : edges) {
      deg[static_cast<std::size_t>(i)]++;
      deg[static_cast<std::size_t>(j)]++;
    }
    return deg;
  }

  void validate() const {
    require(n >= 0, "negative node count");
    require(X.rows() == n, "attribute matrix must have one row per node (" +
                               std::to_string(X.rows()) + " rows for n=" + std::to_string(n) + ")");
    require(n == 0 || X.cols() >= 1, "attribute dimension must be >= 1");
    check_finite(X, "attributes");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& [i, j] = edges[k];
      require(i >= 0 && j >= 0 && i < n && j < n,
              "edge endpoint out of range at index " + std::to_string(k));
      require(i < j, "edges must be stored with i < j (self-loops excluded)");
      if (k > 0) require(edges[k - 1] < edges[k], "edges must be sorted and unique");
    }
    if (!labels.empty()) {
      require(labels.size() == static_cast<std::size_t>(n), "label count mismatch");
      for (int l : labels) require(l >= 0, "negative class label");
    }
    if (!anomaly_flags.empty())
      require(anomaly_flags.size() == static_cast<std::size_t>(n), "anomaly flag count mismatch");
  }
};

// Canonicalize an edge list: order endpoints, sort, drop duplicates and
// self-loops. Returns the number of dropped entries through `dropped`.
inline std::vector<Edge> canonical_edges(std::vector<Edge> raw, int* dropped = nullptr) {
  int drop_count = 0;
  std::vector<Edge> out;
  out.reserve(raw.size());
  for (auto [i, j] : raw) {
    if (i == j) {
      drop_count++;
      continue;
    }
    out.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(out.begin(), out.end());
  const auto last = std::unique(out.begin(), out.end());
  drop_count += static_cast<int>(out.end() - last);
  out.erase(last, out.end());
  if (dropped) *dropped = drop_count;
  return out;
}

// Symmetric binary adjacency (values 1.0), optionally with unit self-loops.
inline CsrMatrix binary_adjacency(const AttributedGraph& g, bool self_loops = false) {
  std::vector<std::tuple<int, int, double>> coo;
  coo.reserve(2 * g.edges.size() + (self_loops ? g.n : 0));
  for (const auto& [i, j] : g.edges) {
    coo.emplace_back(i, j, 1.0);
    coo.emplace_back(j, i, 1.0);
  }
  if (self_loops)
    for (int i = 0; i < g.n; ++i) coo.emplace_back(i, i, 1.0);
  return CsrMatrix::from_coo(g.n, g.n, std::move(coo));
}

// Dense binary adjacency row for node i (no self-loop), used by anomaly scoring.
inline Dense dense_adjacency(const AttributedGraph& g) {
  Dense a = Dense::Zero(g.n, g.n);
  for (const auto& [i, j] : g.edges) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  return a;
}

}  // namespace advgae
