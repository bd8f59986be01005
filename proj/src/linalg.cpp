#include "frobq/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "frobq/errors.hpp"

namespace frobq {

void accumulate(SparseVec& y, std::size_t index, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = y.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) y.erase(it);
  }
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) accumulate(y, i, a * v);
}

SparseMatrix::SparseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows) {}

void SparseMatrix::check_entry(std::size_t col, const Scalar& value) const {
  if (col >= cols_) {
    throw std::out_of_range("column " + std::to_string(col) + " out of range");
  }
  if (!field_.contains(value)) {
    throw ScalarKindError("entry of a different field than the matrix (" +
                          field_.name() + ")");
  }
}

Scalar SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  const auto it = r.find(col);
  return it == r.end() ? field_.zero() : it->second;
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Scalar& value) {
  check_entry(col, value);
  auto& r = rows_.at(row);
  if (value.is_zero()) {
    r.erase(col);
  } else {
    r.insert_or_assign(col, value);
  }
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Scalar& value) {
  check_entry(col, value);
  accumulate(rows_.at(row), col, value);
}

void SparseMatrix::push_row(SparseVec row) {
  for (const auto& [c, v] : row) {
    check_entry(c, v);
    if (v.is_zero()) throw std::invalid_argument("explicit zero in sparse row");
  }
  rows_.push_back(std::move(row));
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar acc = field_.zero();
    for (const auto& [c, a] : rows_[i]) {
      const auto it = v.find(c);
      if (it != v.end()) acc += a * it->second;
    }
    if (!acc.is_zero()) out.emplace(i, acc);
  }
  return out;
}

namespace detail {

namespace {

void check_kinds(const SparseMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      if (!m.field().contains(v)) {
        throw ScalarKindError("mixed scalar kinds in matrix");
      }
    }
  }
}

// Among candidate rows, prefer the smallest pivot magnitude; ties go to the
// earliest row.
template <class Get>
std::size_t choose_pivot(const std::vector<std::size_t>& candidates, Get get) {
  std::size_t best = candidates.front();
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (Scalar::smaller_magnitude(get(candidates[i]), get(best))) {
      best = candidates[i];
    }
  }
  return best;
}

}  // namespace

RrefResult rref_sparse(const SparseMatrix& m) {
  check_kinds(m);
  std::vector<SparseVec> active;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) active.push_back(m.row(r));
  }

  std::vector<SparseVec> pivot_rows;
  std::vector<std::size_t> pivots;
  while (!active.empty()) {
    std::size_t col = active.front().begin()->first;
    for (const auto& row : active) col = std::min(col, row.begin()->first);

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (active[i].begin()->first == col) candidates.push_back(i);
    }
    const std::size_t chosen = choose_pivot(
        candidates, [&](std::size_t i) -> const Scalar& { return active[i].begin()->second; });

    SparseVec pivot = std::move(active[chosen]);
    const Scalar inv = pivot.begin()->second.inverse();
    for (auto& [c, v] : pivot) v *= inv;

    std::vector<SparseVec> next;
    next.reserve(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (i == chosen) continue;
      SparseVec row = std::move(active[i]);
      if (row.begin()->first == col) {
        const Scalar factor = -row.begin()->second;
        axpy(row, factor, pivot);
      }
      if (!row.empty()) next.push_back(std::move(row));
    }
    active = std::move(next);
    pivot_rows.push_back(std::move(pivot));
    pivots.push_back(col);
  }

  // Back substitution clears every pivot column above its pivot.
  for (std::size_t i = pivot_rows.size(); i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto it = pivot_rows[j].find(pivots[i]);
      if (it == pivot_rows[j].end()) continue;
      const Scalar factor = -it->second;
      axpy(pivot_rows[j], factor, pivot_rows[i]);
    }
  }

  SparseMatrix reduced(m.field(), 0, m.cols());
  for (auto& row : pivot_rows) reduced.push_row(std::move(row));
  while (reduced.rows() < m.rows()) reduced.push_row({});
  return {std::move(reduced), std::move(pivots)};
}

RrefResult rref_dense(const SparseMatrix& m) {
  check_kinds(m);
  const Field& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols, f.zero()));
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;
  }

  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
    std::vector<std::size_t> candidates;
    for (std::size_t r = next_row; r < rows; ++r) {
      if (!a[r][c].is_zero()) candidates.push_back(r);
    }
    if (candidates.empty()) continue;
    const std::size_t chosen =
        choose_pivot(candidates, [&](std::size_t r) -> const Scalar& { return a[r][c]; });
    // Move the pivot row up, keeping the others in their relative order.
    std::rotate(a.begin() + static_cast<std::ptrdiff_t>(next_row),
                a.begin() + static_cast<std::ptrdiff_t>(chosen),
                a.begin() + static_cast<std::ptrdiff_t>(chosen) + 1);
    const Scalar inv = a[next_row][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[next_row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next_row || a[r][c].is_zero()) continue;
      const Scalar factor = a[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!a[next_row][k].is_zero()) a[r][k] -= factor * a[next_row][k];
      }
    }
    pivots.push_back(c);
    ++next_row;
  }

  SparseMatrix reduced(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!a[r][c].is_zero()) reduced.set(r, c, a[r][c]);
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

}  // namespace detail

RrefResult rref(const SparseMatrix& m) {
  if (m.cols() < detail::kDenseColumnLimit) return detail::rref_dense(m);
  return detail::rref_sparse(m);
}

KernelBasis kernel_basis(const SparseMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  KernelBasis kb;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    SparseVec v;
    v.emplace(free, m.field().one());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const auto& row = r.reduced.row(i);
      const auto it = row.find(free);
      if (it != row.end()) v.emplace(r.pivots[i], -it->second);
    }
    kb.vectors.push_back(std::move(v));
  }
  kb.dimension = kb.vectors.size();
  return kb;
}

std::size_t rank(const SparseMatrix& m) { return rref(m).pivots.size(); }

}  // namespace frobq
