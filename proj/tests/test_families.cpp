#include <doctest.h>

#include "fixtures.hpp"
#include "frobq/closed_forms.hpp"
#include "frobq/errors.hpp"
#include "frobq/families.hpp"
#include "frobq/frobenius.hpp"

using namespace frobq;
using fixture::path;

namespace {

std::vector<std::string> generator_names(const BoundQuiver& b) {
  std::vector<std::string> out;
  for (const auto& g : b.ideal.generators) {
    std::string s;
    for (const auto& [p, c] : g.terms()) {
      if (!s.empty()) s += " + ";
      s += c.str() + " " + format_path(b.quiver, p);
    }
    out.push_back(s);
  }
  return out;
}

bool same(const BoundQuiver& x, const BoundQuiver& y) {
  return x.quiver.vertex_names() == y.quiver.vertex_names() &&
         generator_names(x) == generator_names(y) && x.quiver.arrow_count() == y.quiver.arrow_count() &&
         [&] {
           for (std::size_t i = 0; i < x.quiver.arrow_count(); ++i) {
             const auto& a = x.quiver.arrow(i);
             const auto& b = y.quiver.arrow(i);
             if (a.name != b.name || a.source != b.source || a.target != b.target) return false;
           }
           return true;
         }();
}

}  // namespace

TEST_CASE("linear quivers") {
  const auto a3 = gen_linear(3);
  CHECK(a3.quiver.vertex_names() == std::vector<std::string>{"1", "2", "3"});
  CHECK(a3.ideal.generators.empty());
  CHECK(generator_names(gen_linear(4, {{1, 3}})) ==
        std::vector<std::string>{"1 a_{1}*a_{2}*a_{3}"});
  CHECK(generator_names(gen_linear(3, {{1, 2}})) == std::vector<std::string>{"1 a_{1}*a_{2}"});
  CHECK_THROWS_AS(gen_linear(3, {{2, 2}}), ValidationError);
  CHECK_THROWS_AS(gen_linear(3, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(gen_linear(0), ValidationError);
}

TEST_CASE("cycles") {
  const auto k = gen_cycle(1, 2);
  CHECK(generator_names(k) == std::vector<std::string>{"1 a_{1}*a_{1}"});
  CHECK(gen_cycle(3, 2).ideal.generators.size() == 3);
  CHECK(generator_names(gen_cycle(2, 3)) ==
        std::vector<std::string>{"1 a_{1}*a_{2}*a_{1}", "1 a_{2}*a_{1}*a_{2}"});
  CHECK_THROWS_AS(gen_cycle(3, 1), ValidationError);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = gen_cycle(n, 2);
    CHECK(same(c, gen_radical_square_zero(c.quiver)));
  }
}

TEST_CASE("canonical algebras") {
  const auto two = gen_canonical({{2, 2}, {}});
  CHECK(two.ideal.generators.empty());
  const auto three = gen_canonical({{2, 2, 2}, {Scalar(1)}});
  CHECK(generator_names(three) ==
        std::vector<std::string>{"1 a^{1}_{1}*a^{1}_{2} + -1 a^{2}_{1}*a^{2}_{2} + -1 a^{3}_{1}*a^{3}_{2}"});
  CHECK_THROWS_AS(gen_canonical({{2, 2, 2}, {Scalar(0)}}), ValidationError);
  CHECK_THROWS_AS(gen_canonical({{2, 2, 2, 2}, {Scalar(3), Scalar(3)}}), ValidationError);
  CHECK_THROWS_AS(gen_canonical({{2, 2, 2}, {}}), ValidationError);
  CHECK_THROWS_AS(gen_canonical({{2}, {}}), ValidationError);
}

TEST_CASE("toupie quivers") {
  const auto d = gen_toupie({2, 2}, {}, {{Scalar(1), Scalar(-1)}});
  CHECK(same(d, gen_diamond(2, 2)));
  const auto g = gen_toupie({3, 2, 2}, {},
                            {{Scalar(-1), Scalar(1), Scalar(0)}, {Scalar(-1), Scalar(0), Scalar(1)}});
  CHECK(same(g, gen_generalized_diamond({3, 2, 2})));
  const auto single = gen_toupie({3}, {{1, 1, 2}});
  CHECK(single.quiver.vertex_count() == 4);
  CHECK(generator_names(single) == std::vector<std::string>{"1 a^{1}_{1}*a^{1}_{2}"});
  CHECK(toupie_shape(single.quiver));
  CHECK_THROWS_AS(gen_toupie({}), ValidationError);
  CHECK_THROWS_AS(gen_toupie({2, 2}, {{3, 1, 2}}), ValidationError);
  CHECK_THROWS_AS(gen_toupie({2, 2}, {{1, 2, 2}}), ValidationError);
  CHECK_THROWS_AS(gen_toupie({2, 2}, {}, {{Scalar(1)}}), ValidationError);
}

TEST_CASE("radical square zero ideals") {
  CHECK(generator_names(gen_radical_square_zero(gen_linear(3).quiver)) ==
        std::vector<std::string>{"1 a_{1}*a_{2}"});
  const Quiver star({"p", "q1", "q2"}, {{"a", "p", "q1"}, {"b", "p", "q2"}});
  CHECK(gen_radical_square_zero(star).ideal.generators.empty());
  CHECK(generator_names(gen_radical_square_zero(Quiver({"p"}, {{"x", "p", "p"}}))) ==
        std::vector<std::string>{"1 x*x"});
}

TEST_CASE("random generation") {
  const RandomSpec spec{42, 5, 7, RandomRegime::kRadicalSquareZero, true};
  CHECK(same(gen_random(spec), gen_random(spec)));
  CHECK(parse_regime("rsz") == RandomRegime::kRadicalSquareZero);
  CHECK(to_string(parse_regime("string-quadratic")) == "string-quadratic");
  CHECK_THROWS_AS(parse_regime("gentle"), ValidationError);

  const auto s = gen_random({7, 4, 6, RandomRegime::kStringQuadratic, true});
  const AlgebraBasis sa = compute_basis(s.quiver, s.ideal);
  CHECK(degree_condition(s.quiver));
  CHECK(continuation_condition(sa));

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (auto regime : {RandomRegime::kAcyclicMonomial, RandomRegime::kRadicalSquareZero,
                        RandomRegime::kStringQuadratic}) {
      const auto b = gen_random({seed, 5, 7, regime, seed % 3 != 0});
      CHECK(b.quiver.vertex_count() <= 5);
      CHECK(b.quiver.arrow_count() <= 7);
      CHECK(validate(b.quiver, b.ideal).monomial);
      CHECK_NOTHROW(compute_bound(b.quiver, b.ideal));
      if (regime == RandomRegime::kAcyclicMonomial) CHECK(is_acyclic(b.quiver));
      if (regime == RandomRegime::kStringQuadratic) {
        CHECK(is_string_quadratic(compute_basis(b.quiver, b.ideal)));
      }
      if (regime == RandomRegime::kRadicalSquareZero) {
        CHECK(is_radical_square_zero(b.quiver, b.ideal));
      }
    }
  }
}

TEST_CASE("every fixed family validates and acyclic ones have the longest-path bound") {
  for (const auto& b : fixture::corpus(10)) {
    CHECK_NOTHROW(validate(b.quiver, b.ideal));
    if (const auto longest = longest_path_length(b.quiver)) {
      CHECK(compute_bound(b.quiver, b.ideal) == *longest + 1);
    }
  }
}

TEST_CASE("equal-length diamonds have a one-dimensional space") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto d = gen_toupie({n, n}, {}, {{Scalar(1), Scalar(-1)}});
    CHECK(solve_frobenius_space(compute_basis(d.quiver, d.ideal)).dimension == 1);
  }
}
