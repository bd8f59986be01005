#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobq/ideal.hpp"
#include "frobq/quiver.hpp"
#include "frobq/scalar.hpp"

namespace frobq {

struct BoundQuiver {
  Quiver quiver;
  IdealSpec ideal;
};

// Monomial relation a_start ... a_{start+length-1}; positions are 1-based.
struct SegmentRelation {
  std::size_t start = 1;
  std::size_t length = 2;
};

// A_n: vertices 1..n, arrows a_i: i -> i+1.
BoundQuiver gen_linear(std::size_t n, const std::vector<SegmentRelation>& relations = {});

// Oriented n-cycle (arrows a_i: i -> i+1 mod n) with every path of length d
// as a generator.
BoundQuiver gen_cycle(std::size_t n, std::size_t d);

struct CanonicalSpec {
  std::vector<std::size_t> weights;  // n_1..n_t, t >= 2, each >= 1
  std::vector<Scalar> lambdas;       // lambda_3..lambda_t, distinct, nonzero
};

// Branch i: 0 -> v^{i}_{1} -> ... -> w with arrows a^{i}_{1..n_i}; relations
// a^(1) - lambda_i a^(2) - a^(i) for i = 3..t.
BoundQuiver gen_canonical(const CanonicalSpec& spec);

struct BranchRelation {
  std::size_t branch = 1;  // 1-based
  std::size_t start = 1;
  std::size_t length = 2;
};

// Toupie quiver with the given branch lengths. Every linear relation is a
// coefficient vector over the branches (one entry per branch).
BoundQuiver gen_toupie(const std::vector<std::size_t>& branch_lengths,
                       const std::vector<BranchRelation>& monomial = {},
                       const std::vector<std::vector<Scalar>>& linear = {});

// Two branches with the relation top - bottom.
BoundQuiver gen_diamond(std::size_t top, std::size_t bottom);
// Relations a^(i) - a^(1) for i = 2..t.
BoundQuiver gen_generalized_diamond(const std::vector<std::size_t>& branch_lengths);

// Every composable length-2 path as a generator.
BoundQuiver gen_radical_square_zero(const Quiver& q);

// The four isolated local cases of string quadratic algebras (k = 1..4).
BoundQuiver gen_string_case(int k);

enum class RandomRegime { kAcyclicMonomial, kRadicalSquareZero, kStringQuadratic };

RandomRegime parse_regime(const std::string& name);
std::string to_string(RandomRegime regime);

struct RandomSpec {
  std::uint64_t seed = 0;
  std::size_t max_vertices = 5;
  std::size_t max_arrows = 7;
  RandomRegime regime = RandomRegime::kRadicalSquareZero;
  bool allow_loops = true;
};

// Seed-deterministic; draws are rejected (disconnected quiver, bound not
// certified) and redrawn a bounded number of times.
BoundQuiver gen_random(const RandomSpec& spec);

}  // namespace frobq
