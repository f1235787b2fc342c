#pragma once

#include <cmath>
#include <tuple>
#include <vector>

#include "advgae/graph.hpp"
#include "advgae/sparse.hpp"

namespace advgae {

// Mask entries are floored here before they enter a degree sum, so the
// inverse square roots below stay defined under adversarial updates.
inline constexpr double kMinEdgeWeight = 1e-6;

// Symmetric normalization with self-loops: given weighted adjacency W (no
// diagonal, or with a diagonal that is added to the self-loop), returns
// D^{-1/2} (W + I) D^{-1/2} where D is the diagonal of generalized degrees.
inline CsrMatrix normalize_adjacency(const CsrMatrix& w) {
  require(w.n_rows == w.n_cols, "normalization requires a square matrix");
  const int n = w.n_rows;
  std::vector<double> deg(static_cast<std::size_t>(n), 1.0);  // self-loop contributes 1
  for (int r = 0; r < n; ++r)
    for (int k = w.row_ptr[r]; k < w.row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
      deg[static_cast<std::size_t>(r)] += w.values[k];
  std::vector<double> dinv_sqrt(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!(deg[static_cast<std::size_t>(i)] > 0.0))
      throw NumericError("degenerate generalized degree at node " + std::to_string(i) + " (" +
                         std::to_string(deg[static_cast<std::size_t>(i)]) + ")");
    dinv_sqrt[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(deg[static_cast<std::size_t>(i)]);
  }
  std::vector<std::tuple<int, int, double>> coo;
  coo.reserve(w.col_idx.size() + static_cast<std::size_t>(n));
  std::vector<double> diag(static_cast<std::size_t>(n), 1.0);  // the added self-loop weight
  for (int r = 0; r < n; ++r)
    for (int k = w.row_ptr[r]; k < w.row_ptr[static_cast<std::size_t>(r) + 1]; ++k) {
      const int c = w.col_idx[k];
      if (c == r) {
        diag[static_cast<std::size_t>(r)] += w.values[k];
        continue;
      }
      coo.emplace_back(r, c,
                       w.values[k] * dinv_sqrt[static_cast<std::size_t>(r)] *
                           dinv_sqrt[static_cast<std::size_t>(c)]);
    }
  for (int i = 0; i < n; ++i)
    coo.emplace_back(i, i,
                     diag[static_cast<std::size_t>(i)] * dinv_sqrt[static_cast<std::size_t>(i)] *
                         dinv_sqrt[static_cast<std::size_t>(i)]);
  return CsrMatrix::from_coo(n, n, std::move(coo));
}

inline CsrMatrix normalize_adjacency(const AttributedGraph& g) {
  return normalize_adjacency(binary_adjacency(g, /*self_loops=*/false));
}

// Pattern plumbing for differentiating the normalized adjacency with respect
// to the per-edge mask. Built once per graph and shared by every tape.
//
//   adj  : binary adjacency pattern (no diagonal), values unused
//   pat  : adjacency-plus-diagonal pattern; normalized values live on it
struct NormContext {
  CsrMatrix adj;
  CsrMatrix pat;
  std::vector<int> pat_row;   // row of each pat entry
  std::vector<int> pat_diag;  // per node, pat entry index of (i,i)
  std::vector<int> adj_pat;   // per adj entry, its index in pat
  std::vector<int> adj_row;   // per adj entry, its row
  std::vector<int> adj_edge;  // per adj entry, undirected edge id
  int n = 0;
  int m = 0;

  static NormContext build(const AttributedGraph& g) {
    NormContext ctx;
    ctx.n = g.n;
    ctx.m = g.m();
    ctx.adj = binary_adjacency(g, /*self_loops=*/false);

    std::vector<std::tuple<int, int, double>> coo;
    coo.reserve(ctx.adj.col_idx.size() + static_cast<std::size_t>(g.n));
    for (int r = 0; r < g.n; ++r) {
      coo.emplace_back(r, r, 0.0);
      for (int k = ctx.adj.row_ptr[r]; k < ctx.adj.row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
        coo.emplace_back(r, ctx.adj.col_idx[k], 0.0);
    }
    ctx.pat = CsrMatrix::from_coo(g.n, g.n, std::move(coo));

    ctx.pat_row.resize(ctx.pat.col_idx.size());
    ctx.pat_diag.assign(static_cast<std::size_t>(g.n), -1);
    for (int r = 0; r < g.n; ++r)
      for (int k = ctx.pat.row_ptr[r]; k < ctx.pat.row_ptr[static_cast<std::size_t>(r) + 1]; ++k) {
        ctx.pat_row[static_cast<std::size_t>(k)] = r;
        if (ctx.pat.col_idx[k] == r) ctx.pat_diag[static_cast<std::size_t>(r)] = k;
      }

    // Map each directed adjacency entry to its pat slot and undirected edge id.
    ctx.adj_pat.resize(ctx.adj.col_idx.size());
    ctx.adj_row.resize(ctx.adj.col_idx.size());
    ctx.adj_edge.resize(ctx.adj.col_idx.size());
    for (int r = 0; r < g.n; ++r)
      for (int k = ctx.adj.row_ptr[r]; k < ctx.adj.row_ptr[static_cast<std::size_t>(r) + 1]; ++k) {
        const int c = ctx.adj.col_idx[k];
        ctx.adj_row[static_cast<std::size_t>(k)] = r;
        // pat row r = diagonal + the same neighbors in the same order.
        const int off = k - ctx.adj.row_ptr[r];
        const int base = ctx.pat.row_ptr[r];
        // entries with col < r precede the diagonal; others follow it
        int pat_k = base + off + (c > r ? 1 : 0);
        ctx.adj_pat[static_cast<std::size_t>(k)] = pat_k;
        const Edge e{std::min(r, c), std::max(r, c)};
        const auto it = std::lower_bound(g.edges.begin(), g.edges.end(), e);
        ctx.adj_edge[static_cast<std::size_t>(k)] = static_cast<int>(it - g.edges.begin());
      }
    return ctx;
  }

  // Generalized degrees for a given undirected mask (one weight per edge).
  std::vector<double> degrees(const std::vector<double>& mask) const {
    std::vector<double> deg(static_cast<std::size_t>(n), 1.0);
    for (std::size_t k = 0; k < adj_row.size(); ++k)
      deg[static_cast<std::size_t>(adj_row[k])] +=
          std::max(mask[static_cast<std::size_t>(adj_edge[k])], kMinEdgeWeight);
    return deg;
  }
};

}  // namespace advgae
