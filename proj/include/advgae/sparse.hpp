#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "advgae/core.hpp"

namespace advgae {

// Compressed-row sparse matrix. Column indices are strictly increasing within
// each row; duplicate entries are rejected at construction.
struct CsrMatrix {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<int> row_ptr;  // size n_rows + 1
  std::vector<int> col_idx;
  std::vector<double> values;

  int nnz() const { return static_cast<int>(col_idx.size()); }

  static CsrMatrix from_coo(int n_rows, int n_cols,
                            std::vector<std::tuple<int, int, double>> entries) {
    CsrMatrix m;
    m.n_rows = n_rows;
    m.n_cols = n_cols;
    std::sort(entries.begin(), entries.end());
    m.row_ptr.assign(static_cast<std::size_t>(n_rows) + 1, 0);
    m.col_idx.reserve(entries.size());
    m.values.reserve(entries.size());
    int prev_r = -1, prev_c = -1;
    for (const auto& [r, c, v] : entries) {
      require(r >= 0 && r < n_rows && c >= 0 && c < n_cols, "sparse entry out of bounds");
      require(!(r == prev_r && c == prev_c), "duplicate sparse entry at (" +
                                                 std::to_string(r) + "," + std::to_string(c) + ")");
      prev_r = r;
      prev_c = c;
      m.row_ptr[static_cast<std::size_t>(r) + 1]++;
      m.col_idx.push_back(c);
      m.values.push_back(v);
    }
    for (int r = 0; r < n_rows; ++r) m.row_ptr[static_cast<std::size_t>(r) + 1] += m.row_ptr[r];
    return m;
  }

  void validate() const {
    require(n_rows >= 0 && n_cols >= 0, "negative dimension");
    require(row_ptr.size() == static_cast<std::size_t>(n_rows) + 1, "row_ptr size mismatch");
    require(row_ptr.front() == 0 && row_ptr.back() == nnz(), "row_ptr range mismatch");
    require(col_idx.size() == values.size(), "nnz mismatch between indices and values");
    for (int r = 0; r < n_rows; ++r) {
      require(row_ptr[r] <= row_ptr[static_cast<std::size_t>(r) + 1], "row_ptr not monotone");
      for (int k = row_ptr[r]; k < row_ptr[static_cast<std::size_t>(r) + 1]; ++k) {
        require(col_idx[k] >= 0 && col_idx[k] < n_cols, "column index out of bounds");
        if (k > row_ptr[r]) require(col_idx[k] > col_idx[k - 1], "columns not strictly increasing");
      }
    }
  }

  // Coefficient lookup; zero when the entry is absent.
  double coeff(int r, int c) const {
    const auto begin = col_idx.begin() + row_ptr[r];
    const auto end = col_idx.begin() + row_ptr[static_cast<std::size_t>(r) + 1];
    auto it = std::lower_bound(begin, end, c);
    if (it == end || *it != c) return 0.0;
    return values[static_cast<std::size_t>(it - col_idx.begin())];
  }

  bool has_entry(int r, int c) const {
    const auto begin = col_idx.begin() + row_ptr[r];
    const auto end = col_idx.begin() + row_ptr[static_cast<std::size_t>(r) + 1];
    return std::binary_search(begin, end, c);
  }

  bool is_symmetric(double tol = 0.0) const {
    if (n_rows != n_cols) return false;
    for (int r = 0; r < n_rows; ++r)
      for (int k = row_ptr[r]; k < row_ptr[static_cast<std::size_t>(r) + 1]; ++k) {
        const double twin = coeff(col_idx[k], r);
        if (std::abs(twin - values[k]) > tol) return false;
      }
    return true;
  }

  Dense to_dense() const {
    Dense d = Dense::Zero(n_rows, n_cols);
    for (int r = 0; r < n_rows; ++r)
      for (int k = row_ptr[r]; k < row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
        d(r, col_idx[k]) = values[k];
    return d;
  }

  // out = this * d, row-major traversal (fixed reduction order per row).
  void multiply_into(const Dense& d, Dense& out) const {
    require(d.rows() == n_cols, "spmm dimension mismatch: " + std::to_string(n_cols) + " vs " +
                                    std::to_string(d.rows()));
    out.setZero(n_rows, d.cols());
    for (int r = 0; r < n_rows; ++r)
      for (int k = row_ptr[r]; k < row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
        out.row(r) += values[k] * d.row(col_idx[k]);
  }

  // out = this^T * d via scatter; equals multiply_into for symmetric matrices.
  void multiply_transpose_into(const Dense& d, Dense& out) const {
    require(d.rows() == n_rows, "spmm^T dimension mismatch");
    out.setZero(n_cols, d.cols());
    for (int r = 0; r < n_rows; ++r)
      for (int k = row_ptr[r]; k < row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
        out.row(col_idx[k]) += values[k] * d.row(r);
  }

  Dense operator*(const Dense& d) const {
    Dense out;
    multiply_into(d, out);
    return out;
  }
};

}  // namespace advgae
