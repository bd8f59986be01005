#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "frobq/quiver.hpp"
#include "frobq/scalar.hpp"

namespace frobq {

// Generators of a two-sided ideal of kQ, each a combination of parallel
// paths of length >= 2.
struct IdealSpec {
  std::vector<PathExpr> generators;

  // Single-term generators (as paths).
  std::vector<Path> monomial_paths() const;
  bool operator==(const IdealSpec&) const = default;
};

struct ValidatedIdeal {
  IdealSpec spec;
  bool monomial = true;
};

// Checks path validity, parallelism and admissibility (every term of length
// >= 2). Throws ValidationError.
ValidatedIdeal validate(const Quiver& q, const IdealSpec& ideal);

// Coefficients mapped into the field; generators that vanish are dropped.
IdealSpec convert_ideal(const IdealSpec& ideal, const Field& field);

// Length of the longest path avoiding every generator as a contiguous
// subpath, or nullopt when such paths have unbounded length. Runs on the
// product of the quiver walk with the generators' prefix automaton.
std::optional<std::size_t> longest_avoiding_path(const Quiver& q,
                                                 std::span<const Path> monomial_gens);

// True iff only finitely many paths avoid all generators.
bool monomial_finiteness_check(const Quiver& q, std::span<const Path> monomial_gens);

// Least certified m with R^m contained in the ideal:
//   acyclic quiver -> longest path length + 1;
//   cyclic quiver  -> 1 + longest path avoiding the monomial generators.
// Throws InfiniteDimensional for a cyclic quiver with no relations at all,
// UnsupportedRegime when the quiver is cyclic and the monomial generators
// leave arbitrarily long surviving paths.
std::size_t compute_bound(const Quiver& q, const IdealSpec& ideal);

}  // namespace frobq
