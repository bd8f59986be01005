#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "frobq/scalar.hpp"

namespace frobq {

// Column-indexed sparse vector; stored entries are never zero.
using SparseVec = std::map<std::size_t, Scalar>;

// y += a * x, dropping cancelled entries.
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
// Adds value at index, dropping the entry when the sum cancels.
void accumulate(SparseVec& y, std::size_t index, const Scalar& value);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Field field, std::size_t rows, std::size_t cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  Scalar at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Scalar& value);
  void add(std::size_t row, std::size_t col, const Scalar& value);
  const SparseVec& row(std::size_t r) const { return rows_.at(r); }
  // Appends a row; every entry must lie inside the column range.
  void push_row(SparseVec row);
  std::size_t nonzeros() const;

  SparseVec apply(const SparseVec& v) const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  void check_entry(std::size_t col, const Scalar& value) const;

  Field field_;
  std::size_t cols_ = 0;
  std::vector<SparseVec> rows_;
};

struct RrefResult {
  SparseMatrix reduced;              // same shape; zero rows at the bottom
  std::vector<std::size_t> pivots;   // ascending pivot columns
};

struct KernelBasis {
  std::size_t dimension = 0;
  std::vector<SparseVec> vectors;
};

// Reduced row echelon form. Pivot rows are chosen per column in ascending
// column order, preferring the entry of smallest magnitude. Matrices with
// fewer than 64 columns go through a dense elimination.
RrefResult rref(const SparseMatrix& m);

// One vector per non-pivot column, in column order: that column set to 1,
// other free columns 0, pivot columns solved.
KernelBasis kernel_basis(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

namespace detail {
inline constexpr std::size_t kDenseColumnLimit = 64;
RrefResult rref_sparse(const SparseMatrix& m);
RrefResult rref_dense(const SparseMatrix& m);
}  // namespace detail

}  // namespace frobq
