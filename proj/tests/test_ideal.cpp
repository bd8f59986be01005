#include <doctest.h>

#include <set>

#include "frobq/algebra.hpp"
#include "frobq/errors.hpp"
#include "frobq/families.hpp"
#include "frobq/ideal.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace frobq;

namespace {

PathExpr mono(const Quiver& q, std::vector<std::string> arrows) {
  return PathExpr(make_path(q, arrows), Scalar(1));
}

std::vector<std::string> basis_names(const AlgebraBasis& a) {
  std::vector<std::string> out;
  for (const auto& p : a.paths()) out.push_back(format_path(a.quiver(), p));
  return out;
}

Quiver loop() { return Quiver({"p"}, {{"x", "p", "p"}}); }

}  // namespace

TEST_CASE("validate") {
  const Quiver q({"1", "2", "3"}, {{"alpha", "1", "2"}, {"beta", "2", "3"}});
  CHECK(validate(q, {{mono(q, {"alpha", "beta"})}}).monomial);
  const auto d = gen_diamond(2, 2);
  CHECK_FALSE(validate(d.quiver, d.ideal).monomial);
  CHECK_THROWS_AS(validate(q, {{mono(q, {"alpha"})}}), ValidationError);
  CHECK_THROWS_AS(validate(q, {{PathExpr()}}), ValidationError);
}

TEST_CASE("finiteness of monomial quotients") {
  const Quiver x = loop();
  const Path xx = make_path(x, std::vector<std::string>{"x", "x"});
  CHECK(monomial_finiteness_check(x, std::vector<Path>{xx}));
  CHECK_FALSE(monomial_finiteness_check(x, std::vector<Path>{}));
  const Quiver z2({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  CHECK(monomial_finiteness_check(
      z2, std::vector<Path>{make_path(z2, std::vector<std::string>{"a", "b"}),
                            make_path(z2, std::vector<std::string>{"b", "a"})}));
  // With only a*b forbidden the surviving paths are b, a, b*a.
  const std::vector<Path> ab{make_path(z2, std::vector<std::string>{"a", "b"})};
  CHECK(monomial_finiteness_check(z2, ab));
  CHECK(longest_avoiding_path(z2, ab) == 2);
  CHECK_FALSE(monomial_finiteness_check(z2, std::vector<Path>{}));
  CHECK(longest_avoiding_path(x, std::vector<Path>{xx}) == 1);
}

TEST_CASE("bounds") {
  CHECK(compute_bound(gen_linear(4).quiver, gen_linear(4, {{1, 2}}).ideal) == 4);
  const auto k = gen_cycle(1, 2);
  CHECK(compute_bound(k.quiver, k.ideal) == 2);
  const Quiver z3({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
  CHECK_THROWS_AS(compute_bound(z3, {}), InfiniteDimensional);
  // Forbidding a*b leaves a only as a last arrow: longest survivor b*c*a.
  CHECK(compute_bound(z3, {{mono(z3, {"a", "b"})}}) == 4);
  CHECK(compute_basis(z3, {{mono(z3, {"a", "b"})}}).dimension() == 9);

  // Commuting square-zero loops: finite, but x*y*x*y... avoids x*x and y*y.
  const Quiver two({"p"}, {{"x", "p", "p"}, {"y", "p", "p"}});
  PathExpr comm = mono(two, {"x", "y"});
  comm.add(make_path(two, std::vector<std::string>{"y", "x"}), Scalar(-1));
  const IdealSpec ideal{{mono(two, {"x", "x"}), mono(two, {"y", "y"}), comm}};
  CHECK_THROWS_AS(compute_bound(two, ideal), UnsupportedRegime);
  CHECK_THROWS_AS(compute_basis(two, ideal), UnsupportedRegime);
}

TEST_CASE("basis examples") {
  SUBCASE("A3 with one relation") {
    const auto b = gen_linear(3, {{1, 2}});
    const AlgebraBasis a = compute_basis(b.quiver, b.ideal);
    CHECK(a.dimension() == 5);
    CHECK(basis_names(a) == std::vector<std::string>{"e_1", "e_2", "e_3", "a_{1}", "a_{2}"});
  }
  SUBCASE("square-zero loop") {
    const auto b = gen_cycle(1, 2);
    const AlgebraBasis a = compute_basis(b.quiver, b.ideal);
    CHECK(basis_names(a) == std::vector<std::string>{"e_1", "a_{1}"});
  }
  SUBCASE("commutative diamond") {
    const auto b = gen_diamond(2, 2);
    const AlgebraBasis a = compute_basis(b.quiver, b.ideal);
    CHECK(a.dimension() == 9);
    const Path top = make_path(b.quiver, std::vector<std::string>{"a^{1}_{1}", "a^{1}_{2}"});
    const Path bottom = make_path(b.quiver, std::vector<std::string>{"a^{2}_{1}", "a^{2}_{2}"});
    CHECK_FALSE(a.index_of(top));
    REQUIRE(a.index_of(bottom));
    CHECK(a.reduce(top) == a.unit(*a.index_of(bottom)));
    const auto x = a.unit(a.arrow_index(b.quiver.arrow_id("a^{1}_{1}")));
    const auto y = a.unit(a.arrow_index(b.quiver.arrow_id("a^{1}_{2}")));
    CHECK(a.multiply(x, y) == a.unit(*a.index_of(bottom)));
  }
  SUBCASE("canonical (2,2,2)") {
    const auto b = gen_canonical({{2, 2, 2}, {Scalar(1)}});
    CHECK(compute_basis(b.quiver, b.ideal).dimension() == 13);
  }
}

TEST_CASE("reduce and multiply basics") {
  const auto b = gen_linear(3, {{1, 2}});
  const AlgebraBasis a = compute_basis(b.quiver, b.ideal);
  const Path ab = make_path(b.quiver, std::vector<std::string>{"a_{1}", "a_{2}"});
  CHECK(a.reduce(ab).empty());
  const auto e1 = a.vertex_index(0);
  const auto e2 = a.vertex_index(1);
  CHECK(a.reduce(trivial_path(b.quiver, 0)) == a.unit(e1));
  CHECK(a.multiply(a.unit(e1), a.unit(e1)) == a.unit(e1));
  CHECK(a.multiply(a.unit(e1), a.unit(e2)).empty());
  CHECK(a.multiply(a.unit(a.arrow_index(0)), a.unit(a.arrow_index(1))).empty());

  const Quiver other({"u"}, {{"y", "u", "u"}});
  Path foreign = make_path(other, std::vector<std::string>{"y", "y"});
  CHECK_THROWS_AS(a.reduce(foreign), ValidationError);
}

TEST_CASE("coefficients are mapped into the field") {
  const auto b = gen_toupie({2, 2}, {}, {{Scalar(1), Scalar(7)}});
  CHECK(compute_basis(b.quiver, b.ideal).dimension() == 9);
  // Over F7 the relation becomes a monomial one on the first branch.
  const AlgebraBasis a7 = compute_basis(b.quiver, b.ideal, Field::prime(7));
  CHECK(a7.dimension() == 9);
  CHECK(a7.is_monomial());
  const auto half = gen_toupie({2, 2}, {}, {{Scalar(mpq_class(1, 7)), Scalar(1)}});
  CHECK_THROWS_AS(compute_basis(half.quiver, half.ideal, Field::prime(7)), ValidationError);
}

TEST_CASE("monomial quotients match subword avoidance") {
  for (const auto& b : fixture::corpus()) {
    const AlgebraBasis a = compute_basis(b.quiver, b.ideal);
    if (!a.is_monomial()) continue;
    std::vector<std::vector<std::string>> gens;
    for (const auto& p : b.ideal.monomial_paths()) gens.push_back(oracle::names_of(b.quiver, p));
    const auto expected = oracle::avoiding_paths(b.quiver, gens, a.bound() - 1);
    std::set<std::vector<std::string>> got;
    for (const auto& p : a.paths()) got.insert(oracle::names_of(b.quiver, p));
    CHECK(got == expected);
    // Nothing of length bound() survives.
    CHECK(oracle::avoiding_paths(b.quiver, gens, a.bound()).size() == expected.size());
  }
}

TEST_CASE("algebra invariants on the corpus") {
  for (const auto& b : fixture::corpus()) {
    const AlgebraBasis a = compute_basis(b.quiver, b.ideal);
    const Quiver& q = a.quiver();
    std::size_t block_total = 0;
    for (VertexId s = 0; s < q.vertex_count(); ++s) {
      for (VertexId t = 0; t < q.vertex_count(); ++t) block_total += a.block(s, t).size();
    }
    CHECK(block_total == a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) CHECK(a.reduce(a.path(i)) == a.unit(i));

    // Reduction stays in the block and is idempotent on every short path.
    for (const auto& p : enumerate_paths(q, a.bound())) {
      const SparseVec r = a.reduce(p);
      if (p.length() >= a.bound()) CHECK(r.empty());
      for (const auto& [i, c] : r) {
        CHECK(a.path(i).source() == p.source());
        CHECK(a.path(i).target() == p.target());
      }
      SparseVec again;
      for (const auto& [i, c] : r) axpy(again, c, a.reduce(a.path(i)));
      CHECK(again == r);
    }

    // Unit and associativity.
    const SparseVec one = a.one();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      CHECK(a.multiply(one, a.unit(i)) == a.unit(i));
      CHECK(a.multiply(a.unit(i), one) == a.unit(i));
    }
    if (a.dimension() > 20) continue;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      for (std::size_t j = 0; j < a.dimension(); ++j) {
        const SparseVec ij = a.product(i, j);
        for (std::size_t k = 0; k < a.dimension(); ++k) {
          CHECK(a.multiply(ij, a.unit(k)) == a.multiply(a.unit(i), a.product(j, k)));
        }
      }
    }
  }
}

TEST_CASE("square-zero ideals keep only trivial paths and arrows") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto b = gen_random({seed, 6, 8, RandomRegime::kRadicalSquareZero, true});
    const AlgebraBasis a = compute_basis(b.quiver, b.ideal);
    CHECK(a.dimension() == b.quiver.vertex_count() + b.quiver.arrow_count());
  }
}
