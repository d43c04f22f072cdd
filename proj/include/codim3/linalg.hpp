// Dense exact linear algebra over a coefficient field: reduced row echelon
// form, kernels, and an incremental echelon structure that can express new
// vectors in terms of tagged basis rows (used to project cycles onto homology
// classes).

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "codim3/errors.hpp"

namespace codim3 {

template <class F>
struct Matrix {
  using Elem = typename F::Elem;
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Elem& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// In-place reduced row echelon form; returns the pivot columns in order.
template <class F>
std::vector<int> rref(const F& k, Matrix<F>& mat) {
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < mat.cols && rank < mat.rows; ++c) {
    int pr = -1;
    for (int r = rank; r < mat.rows; ++r)
      if (!k.is_zero(mat.at(r, c))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != rank)
      for (int j = c; j < mat.cols; ++j) std::swap(mat.at(pr, j), mat.at(rank, j));
    auto piv_inv = k.inv(mat.at(rank, c));
    for (int j = c; j < mat.cols; ++j) mat.at(rank, j) = k.mul(mat.at(rank, j), piv_inv);
    for (int r = 0; r < mat.rows; ++r) {
      if (r == rank || k.is_zero(mat.at(r, c))) continue;
      auto factor = mat.at(r, c);
      for (int j = c; j < mat.cols; ++j)
        mat.at(r, j) = k.sub(mat.at(r, j), k.mul(factor, mat.at(rank, j)));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

template <class F>
int rank(const F& k, Matrix<F> mat) {
  return static_cast<int>(rref(k, mat).size());
}

// Basis of the right kernel {v : M v = 0}, one vector per free column,
// ordered by free column ascending.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& k, Matrix<F> mat) {
  std::vector<int> pivots = rref(k, mat);
  std::vector<bool> is_pivot(mat.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> out;
  for (int f = 0; f < mat.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Elem> v(mat.cols, k.zero());
    v[f] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = k.neg(mat.at(static_cast<int>(i), f));
    out.push_back(std::move(v));
  }
  return out;
}

// Incremental row echelon over a fixed ambient dimension.  Rows are stored
// monic at their pivot and are never back-reduced, so a stored row equals the
// inserted vector minus a combination of earlier rows.  project() therefore
// recovers exact coefficients on the tagged rows.
template <class F>
class Echelon {
 public:
  using Elem = typename F::Elem;

  Echelon(const F& k, int dim) : k_(k), dim_(dim), pivot_row_(dim, -1) {}

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(rows_.size()); }

  // Reduce v against stored rows; keep a surviving remainder with `tag`.
  // Returns true if the vector enlarged the span.
  bool insert(std::vector<Elem> v, int tag) {
    int j = reduce_in_place(v, nullptr);
    if (j < 0) return false;
    auto inv = k_.inv(v[j]);
    for (int c = j; c < dim_; ++c) v[c] = k_.mul(v[c], inv);
    pivot_row_[j] = static_cast<int>(rows_.size());
    rows_.push_back(Row{std::move(v), j, tag});
    return true;
  }

  // Stored (normalized) remainder of the most recent successful insert.
  const std::vector<Elem>& back_row() const { return rows_.back().v; }

  // Writes v as a combination of stored rows and returns the coefficients on
  // rows with tag >= 0, or nullopt if v lies outside the span.
  std::optional<std::vector<std::pair<int, Elem>>> project(std::vector<Elem> v) const {
    std::vector<std::pair<int, Elem>> coeffs;
    int j = reduce_in_place(v, &coeffs);
    if (j >= 0) return std::nullopt;
    return coeffs;
  }

 private:
  struct Row {
    std::vector<Elem> v;
    int pivot;
    int tag;
  };

  // Eliminates v against stored rows; returns the leading index of the
  // remainder or -1 if it vanished.  Optionally records coefficients used on
  // tagged rows.
  int reduce_in_place(std::vector<Elem>& v,
                      std::vector<std::pair<int, Elem>>* coeffs) const {
    int j = 0;
    while (j < dim_) {
      if (k_.is_zero(v[j])) {
        ++j;
        continue;
      }
      int ri = pivot_row_[j];
      if (ri < 0) return j;
      const Row& row = rows_[ri];
      Elem factor = v[j];
      if (coeffs && row.tag >= 0) coeffs->push_back({row.tag, factor});
      for (int c = j; c < dim_; ++c)
        v[c] = k_.sub(v[c], k_.mul(factor, row.v[c]));
    }
    return -1;
  }

  F k_;
  int dim_;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;
};

}  // namespace codim3
