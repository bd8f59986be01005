#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "frobq/ideal.hpp"
#include "frobq/linalg.hpp"
#include "frobq/quiver.hpp"
#include "frobq/scalar.hpp"

namespace frobq {

// Normal-form basis of A = kQ/I with reduction and multiplication.
//
// Basis elements are paths, indexed in canonical path order. Every trivial
// path and every arrow is a basis element. Coordinates are SparseVec over
// basis indices.
class AlgebraBasis {
 public:
  const Quiver& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  // Generators with coefficients in field().
  const IdealSpec& ideal() const noexcept { return ideal_; }
  bool is_monomial() const noexcept { return monomial_; }
  // Every path of length >= bound() lies in I.
  std::size_t bound() const noexcept { return bound_; }

  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Path>& paths() const noexcept { return basis_; }
  const Path& path(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> index_of(const Path& p) const;
  std::size_t vertex_index(VertexId v) const { return vertex_index_.at(v); }
  std::size_t arrow_index(ArrowId a) const { return arrow_index_.at(a); }

  // Basis indices whose paths start (end) at v, ascending.
  const std::vector<std::size_t>& starting_at(VertexId v) const { return starting_.at(v); }
  const std::vector<std::size_t>& ending_at(VertexId v) const { return ending_.at(v); }
  // Basis indices of the (s, t) block, ascending.
  std::vector<std::size_t> block(VertexId s, VertexId t) const;

  SparseVec unit(std::size_t i) const;
  // Throws ValidationError for a path that is not in the quiver.
  SparseVec reduce(const Path& p) const;
  SparseVec reduce(const PathExpr& x) const;
  // Reduced product of two basis elements (table lookup).
  const SparseVec& product(std::size_t i, std::size_t j) const {
    return products_.at(i * basis_.size() + j);
  }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  // The sum of all trivial paths.
  SparseVec one() const;

  // Coordinates back to a combination of basis paths.
  PathExpr to_expr(const SparseVec& x) const;

 private:
  friend AlgebraBasis compute_basis(const Quiver&, const IdealSpec&, const Field&);
  AlgebraBasis(Quiver q, Field f) : quiver_(std::move(q)), field_(f) {}

  Quiver quiver_;
  Field field_;
  IdealSpec ideal_;
  bool monomial_ = true;
  std::size_t bound_ = 0;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  // Non-basis paths of length < bound and their normal forms.
  std::map<Path, SparseVec> reductions_;
  std::vector<std::size_t> vertex_index_;
  std::vector<std::size_t> arrow_index_;
  std::vector<std::vector<std::size_t>> starting_;
  std::vector<std::vector<std::size_t>> ending_;
  std::vector<SparseVec> products_;
};

// Builds the basis of kQ/I. With m = compute_bound(q, ideal), the relation
// space inside span{paths of length < m} is spanned by the truncations of
// u*g*v (g a generator, u, v paths); it is row reduced block by block and the
// non-pivot paths form the basis. Throws what validate/compute_bound throw,
// and InternalFault if the self-checks (ideal closure, R^m in I) fail.
AlgebraBasis compute_basis(const Quiver& q, const IdealSpec& ideal,
                           const Field& field = Field::rationals());

}  // namespace frobq
