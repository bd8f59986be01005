#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobq/algebra.hpp"
#include "frobq/frobenius.hpp"

namespace frobq {

// ---- radical square zero ------------------------------------------------

// True when no basis path has length >= 2.
bool is_radical_square_zero(const AlgebraBasis& a);
bool is_radical_square_zero(const Quiver& q, const IdealSpec& ideal);

// Spaces of the quotient formula, inside the formal span of x (x) y with
// x, y trivial paths or arrows.
struct RszFormula {
  std::size_t numerator = 0;    // dim N
  std::size_t denominator = 0;  // dim (N intersected with D)
  std::size_t dimension = 0;    // dim N - dim (N intersected with D)
};

// N = sum_p V_p (x) Wbar_p + Vbar_p (x) W_p and
// D = sum_{outdeg p >= 2} V_p (x) <e_p> + sum_{indeg p >= 2} <e_p> (x) W_p
//     + sum_alpha <alpha (x) e_s - e_t (x) alpha>.
// Throws ValidationError for a quiver without arrows.
RszFormula radical_square_zero_formula(const Quiver& q);
std::size_t radical_square_zero_dimension(const Quiver& q);

// ---- string conditions --------------------------------------------------

// At most two arrows leave and at most two arrows enter each vertex.
bool degree_condition(const Quiver& q);
// For every arrow, at most one arrow continues it and at most one arrow
// precedes it with a nonzero product.
bool continuation_condition(const AlgebraBasis& a);
// Monomial ideal plus both conditions above.
bool is_string(const AlgebraBasis& a);
// String with every generator of length 2.
bool is_string_quadratic(const AlgebraBasis& a);
// String quadratic and every arrow has at most one zero continuation and at
// most one zero predecessor.
bool is_gentle(const AlgebraBasis& a);

// Delta(e_{t(a_i)}) = a_{i+1}...a_s (x) a_1...a_i for i = 1..s-1, where
// r = a_1...a_s is a monomial generator of length >= 3. Throws
// ValidationError when the input is not a string algebra or r is not such a
// generator, VerificationError when the candidate fails the bimodule check.
CoproductCandidate string_relation_witness(const AlgebraBasis& a, const Path& r);

// ---- local patterns -----------------------------------------------------

struct LocalPatternMatch {
  int pattern = 0;  // 1..5
  VertexId vertex = 0;
  std::vector<ArrowId> in_arrows;
  std::vector<ArrowId> out_arrows;
  // Length-2 compositions through the vertex that vanish in A.
  std::vector<Path> zero_products;
  // The witness is Delta(e_vertex) = left (x) right.
  ArrowId left = 0;   // an out-arrow
  ArrowId right = 0;  // an in-arrow
};

// Scans every vertex for the five local configurations:
//   1: in {a, b}, out {c}, with ac = bc = 0;
//   2: in {a}, out {b, c}, with ab = ac = 0;
//   3: in {a, b}, out {c, d}, exactly three products zero;
//   4: in {a, b}, out {c, d}, all four products zero;
//   5: in {a}, out {b}, with ab = 0.
// Degrees must match exactly; zero means reduce(product) = 0.
std::vector<LocalPatternMatch> detect_local_patterns(const AlgebraBasis& a);

// Delta(e_v) = left (x) right, zero elsewhere. Throws VerificationError
// ("pattern preconditions not satisfied by ideal") when it fails to verify.
CoproductCandidate witness_coproduct(const AlgebraBasis& a, const LocalPatternMatch& m);

// ---- toupie -------------------------------------------------------------

struct ToupieShape {
  VertexId source = 0;
  VertexId sink = 0;
  // Arrow sequences from source to sink, ordered by first arrow.
  std::vector<std::vector<ArrowId>> branches;
};

// nullopt unless there is a unique source, a unique sink, and every other
// vertex has one arrow in and one arrow out.
std::optional<ToupieShape> toupie_shape(const Quiver& q);

enum class ToupieKind { kLinearAn, kGeneralizedDiamond, kMZeroOther, kMPositive };

struct ToupieClassification {
  ToupieKind kind = ToupieKind::kMZeroOther;
  ToupieShape shape;
  // Branches killed in A: a monomial generator inside the branch, or the
  // full branch lying in the span of the linear relations.
  std::vector<bool> monomial_branch;
  std::size_t monomial_count = 0;     // m
  std::size_t independent_count = 0;  // D, rank of the branch images
  std::size_t predicted = 0;
  bool at_least = false;  // prediction is ">= predicted" rather than "="

  bool holds_for(std::size_t frobdim) const {
    return at_least ? frobdim >= predicted : frobdim == predicted;
  }
};

// Throws ValidationError when the quiver is not a toupie quiver or a
// generator with several terms is not a combination of full branches.
ToupieClassification toupie_classify(const AlgebraBasis& a);

std::string to_string(ToupieKind kind);
// "= 1", "= 0" or ">= 1".
std::string prediction_string(const ToupieClassification& c);

// Delta(e_i) = a_i...a_n (x) a_1...a_{i-1} on the interior vertices of every
// branch and Delta(e_0) = b (x) e_0, Delta(e_w) = e_w (x) b with b the first
// branch path. Meaningful on diamonds; not verified here.
CoproductCandidate linear_structure(const AlgebraBasis& a, const ToupieShape& shape);

}  // namespace frobq
