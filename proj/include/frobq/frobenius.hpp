#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobq/algebra.hpp"
#include "frobq/linalg.hpp"

namespace frobq {

// Element of A (x) A over pairs of basis indices (left, right).
using BasisPair = std::pair<std::size_t, std::size_t>;
using TensorElement = std::map<BasisPair, Scalar>;

void accumulate(TensorElement& t, const BasisPair& key, const Scalar& value);
void axpy(TensorElement& y, const Scalar& a, const TensorElement& x);

// (x (x) 1) * t: left factors multiplied by x on the left.
TensorElement left_multiply(const AlgebraBasis& a, const SparseVec& x, const TensorElement& t);
// t * (1 (x) y): right factors multiplied by y on the right.
TensorElement right_multiply(const AlgebraBasis& a, const TensorElement& t, const SparseVec& y);

// A coproduct given by its values on the vertex idempotents.
class CoproductCandidate {
 public:
  explicit CoproductCandidate(std::size_t vertex_count) : values_(vertex_count) {}

  std::size_t vertex_count() const noexcept { return values_.size(); }
  const TensorElement& at(VertexId p) const { return values_.at(p); }
  TensorElement& at(VertexId p) { return values_.at(p); }
  bool is_zero() const;

  bool operator==(const CoproductCandidate&) const = default;

 private:
  std::vector<TensorElement> values_;
};

// Unknown x_{p,(u,v)}: coefficient of u (x) v in Delta(e_p).
struct Unknown {
  VertexId vertex;
  std::size_t left;
  std::size_t right;
  auto operator<=>(const Unknown&) const = default;
};

enum class SupportMode {
  // Only pairs with source(u) = p = target(v) (the forced support).
  kRestricted,
  // Every pair, plus the idempotent equations e_p Delta(e_p) = Delta(e_p) =
  // Delta(e_p) e_p as extra rows.
  kUnrestricted,
};

struct ConstraintSystem {
  SparseMatrix matrix;
  std::vector<Unknown> legend;  // column -> unknown
};

// One row per (arrow alpha: p -> q, tensor pair (w, z)): the coefficient of
// w (x) z in (alpha (x) 1) Delta(e_q) - Delta(e_p) (1 (x) alpha). Zero rows
// are dropped; rows are ordered by (arrow, w, z).
ConstraintSystem build_constraint_system(const AlgebraBasis& a,
                                         SupportMode mode = SupportMode::kRestricted);

CoproductCandidate candidate_from_vector(const AlgebraBasis& a, const std::vector<Unknown>& legend,
                                         const SparseVec& v);
// Inverse of candidate_from_vector; throws ValidationError if the candidate
// has a term without a column in the legend.
SparseVec candidate_to_vector(const std::vector<Unknown>& legend, const CoproductCandidate& c);

struct FrobeniusSpace {
  std::size_t dimension = 0;
  std::vector<CoproductCandidate> basis;
};

// Kernel of the constraint system as coproducts. Each basis candidate is
// re-checked with verify_coproduct; a failure throws InternalFault.
FrobeniusSpace solve_frobenius_space(const AlgebraBasis& a);

// Columns minus rank of the constraint system.
std::size_t frobenius_dimension(const AlgebraBasis& a);

// Delta(w) = (w (x) 1) Delta(e_q) for the basis path w: p -> q.
TensorElement extend_coproduct(const AlgebraBasis& a, const CoproductCandidate& c,
                               std::size_t w);

struct VerifyResult {
  enum class Status { kVerified, kSupportViolation, kNotBimoduleMap };
  Status status = Status::kVerified;
  // Failing pair (x, y) of basis indices, or the offending vertex for a
  // support violation.
  std::optional<std::size_t> x;
  std::optional<std::size_t> y;
  std::optional<VertexId> vertex;
  TensorElement lhs;  // Delta(x y)
  TensorElement rhs;  // (x (x) 1) Delta(y) or Delta(x) (1 (x) y)
  std::string message;

  bool ok() const noexcept { return status == Status::kVerified; }
};

// Independent check over all ordered pairs of basis elements:
// Delta(x y) = (x (x) 1) Delta(y) and Delta(x y) = Delta(x) (1 (x) y).
VerifyResult verify_coproduct(const AlgebraBasis& a, const CoproductCandidate& c);

// The same two equations for a single pair; true when both hold.
bool check_pair(const AlgebraBasis& a, const CoproductCandidate& c, std::size_t x,
                std::size_t y);

std::string format_tensor(const AlgebraBasis& a, const TensorElement& t);

}  // namespace frobq
