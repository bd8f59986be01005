// Shared instances and small helpers for the unit tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobq/algebra.hpp"
#include "frobq/families.hpp"

namespace fixture {

using frobq::BoundQuiver;

inline frobq::AlgebraBasis algebra(const BoundQuiver& b) {
  return frobq::compute_basis(b.quiver, b.ideal);
}

inline frobq::Path path(const frobq::Quiver& q, std::vector<std::string> arrows) {
  return frobq::make_path(q, arrows);
}

inline frobq::PathExpr mono(const frobq::Quiver& q, std::vector<std::string> arrows) {
  return frobq::PathExpr(path(q, std::move(arrows)), frobq::Scalar(1));
}

inline BoundQuiver bound(frobq::Quiver q, std::vector<std::vector<std::string>> gens) {
  frobq::IdealSpec ideal;
  for (auto& g : gens) ideal.generators.push_back(mono(q, std::move(g)));
  return {std::move(q), std::move(ideal)};
}

inline BoundQuiver loop_square_zero() {
  return bound(frobq::Quiver({"p"}, {{"x", "p", "p"}}), {{"x", "x"}});
}

inline BoundQuiver single_vertex() { return {frobq::Quiver({"p"}, {}), {}}; }

// Same bound quiver with fresh vertex and arrow names and a shuffled vertex
// declaration order; arrow ids get permuted through the new name order.
inline BoundQuiver relabel(const BoundQuiver& b, std::mt19937_64& rng) {
  const auto& q = b.quiver;
  std::vector<std::size_t> vperm(q.vertex_count());
  std::vector<std::size_t> aperm(q.arrow_count());
  for (std::size_t i = 0; i < vperm.size(); ++i) vperm[i] = i;
  for (std::size_t i = 0; i < aperm.size(); ++i) aperm[i] = i;
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::shuffle(aperm.begin(), aperm.end(), rng);
  auto vname = [&](std::size_t v) { return "n" + std::to_string(vperm[v]); };
  auto aname = [&](std::size_t a) { return "r" + std::to_string(aperm[a]); };

  std::vector<std::string> vertices(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) vertices[vperm[v]] = vname(v);
  std::vector<frobq::ArrowSpec> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    arrows.push_back({aname(a), vname(q.arrow(a).source), vname(q.arrow(a).target)});
  }
  frobq::Quiver fresh(vertices, arrows);
  frobq::IdealSpec ideal;
  for (const auto& g : b.ideal.generators) {
    frobq::PathExpr e;
    for (const auto& [p, c] : g.terms()) {
      std::vector<std::string> names;
      for (auto a : p.arrows()) names.push_back(aname(a));
      e.add(frobq::make_path(fresh, names), c);
    }
    ideal.generators.push_back(e);
  }
  return {std::move(fresh), std::move(ideal)};
}

// Mixed corpus: fixed families plus seeded random draws from each regime.
inline std::vector<BoundQuiver> corpus(std::uint64_t seeds = 20) {
  using frobq::RandomRegime;
  using frobq::Scalar;
  std::vector<BoundQuiver> out;
  out.push_back(single_vertex());
  out.push_back(loop_square_zero());
  out.push_back(frobq::gen_linear(2));
  out.push_back(frobq::gen_linear(3, {{1, 2}}));
  out.push_back(frobq::gen_linear(5, {{1, 3}, {3, 2}}));
  out.push_back(frobq::gen_cycle(3, 2));
  out.push_back(frobq::gen_cycle(2, 3));
  out.push_back(frobq::gen_cycle(3, 4));
  out.push_back(frobq::gen_diamond(2, 2));
  out.push_back(frobq::gen_diamond(3, 2));
  out.push_back(frobq::gen_generalized_diamond({2, 2, 3}));
  out.push_back(frobq::gen_canonical({{2, 2, 2}, {Scalar(1)}}));
  out.push_back(frobq::gen_canonical({{2, 2, 3, 2}, {Scalar(2), Scalar(-1)}}));
  for (int k = 1; k <= 4; ++k) out.push_back(frobq::gen_string_case(k));
  for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
    out.push_back(frobq::gen_random({seed, 5, 7, RandomRegime::kAcyclicMonomial, true}));
    out.push_back(frobq::gen_random({seed, 4, 6, RandomRegime::kStringQuadratic, true}));
    out.push_back(frobq::gen_random({seed, 4, 6, RandomRegime::kRadicalSquareZero, true}));
  }
  return out;
}

}  // namespace fixture
