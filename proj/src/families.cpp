#include "frobq/families.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "frobq/errors.hpp"

namespace frobq {

namespace {

std::string branch_arrow(std::size_t i, std::size_t j) {
  return "a^{" + std::to_string(i) + "}_{" + std::to_string(j) + "}";
}

std::string branch_vertex(std::size_t i, std::size_t j) {
  return "v^{" + std::to_string(i) + "}_{" + std::to_string(j) + "}";
}

std::string indexed(const std::string& stem, std::size_t i) {
  return stem + "_{" + std::to_string(i) + "}";
}

std::vector<std::string> numbered_vertices(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

PathExpr monomial(const Path& p) { return PathExpr(p, Scalar(1)); }

}  // namespace

BoundQuiver gen_linear(std::size_t n, const std::vector<SegmentRelation>& relations) {
  if (n == 0) throw ValidationError("linear quiver needs at least one vertex");
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 1; i < n; ++i) {
    arrows.push_back({indexed("a", i), std::to_string(i), std::to_string(i + 1)});
  }
  Quiver q(numbered_vertices(n), std::move(arrows));
  IdealSpec ideal;
  for (const auto& r : relations) {
    if (r.start < 1 || r.length < 2 || r.start + r.length - 1 > n - 1) {
      throw ValidationError("relation (" + std::to_string(r.start) + ", " +
                            std::to_string(r.length) + ") does not fit in A_" + std::to_string(n));
    }
    std::vector<std::string> names;
    for (std::size_t k = r.start; k < r.start + r.length; ++k) names.push_back(indexed("a", k));
    ideal.generators.push_back(monomial(make_path(q, names)));
  }
  return {std::move(q), std::move(ideal)};
}

BoundQuiver gen_cycle(std::size_t n, std::size_t d) {
  if (n == 0) throw ValidationError("cycle needs at least one vertex");
  if (d < 2) throw ValidationError("cycle relations need length at least 2");
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 1; i <= n; ++i) {
    arrows.push_back({indexed("a", i), std::to_string(i), std::to_string(i % n + 1)});
  }
  Quiver q(numbered_vertices(n), std::move(arrows));
  IdealSpec ideal;
  for (std::size_t start = 1; start <= n; ++start) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < d; ++k) names.push_back(indexed("a", (start - 1 + k) % n + 1));
    ideal.generators.push_back(monomial(make_path(q, names)));
  }
  return {std::move(q), std::move(ideal)};
}

BoundQuiver gen_toupie(const std::vector<std::size_t>& lengths,
                       const std::vector<BranchRelation>& mono,
                       const std::vector<std::vector<Scalar>>& linear) {
  if (lengths.empty()) throw ValidationError("toupie needs at least one branch");
  std::vector<std::string> vertices{"0"};
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<std::string>> branch_names;
  for (std::size_t i = 1; i <= lengths.size(); ++i) {
    const std::size_t n = lengths[i - 1];
    if (n == 0) throw ValidationError("branch length must be positive");
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::string from = j == 1 ? "0" : branch_vertex(i, j - 1);
      const std::string to = j == n ? "w" : branch_vertex(i, j);
      if (j < n) vertices.push_back(to);
      arrows.push_back({branch_arrow(i, j), from, to});
      names.push_back(branch_arrow(i, j));
    }
    branch_names.push_back(std::move(names));
  }
  vertices.push_back("w");
  Quiver q(std::move(vertices), std::move(arrows));

  IdealSpec ideal;
  for (const auto& r : mono) {
    if (r.branch < 1 || r.branch > lengths.size() || r.start < 1 || r.length < 2 ||
        r.start + r.length - 1 > lengths[r.branch - 1]) {
      throw ValidationError("monomial relation " + std::to_string(r.branch) + ":" +
                            std::to_string(r.start) + ":" + std::to_string(r.length) +
                            " does not fit its branch");
    }
    const auto& names = branch_names[r.branch - 1];
    const auto first = names.begin() + static_cast<std::ptrdiff_t>(r.start - 1);
    ideal.generators.push_back(
        monomial(make_path(q, std::vector<std::string>(first, first + static_cast<std::ptrdiff_t>(r.length)))));
  }
  for (const auto& coeffs : linear) {
    if (coeffs.size() != lengths.size()) {
      throw ValidationError("linear relation needs one coefficient per branch");
    }
    PathExpr g;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!coeffs[i].is_zero()) g.add(make_path(q, branch_names[i]), coeffs[i]);
    }
    if (g.is_zero()) throw ValidationError("linear relation is zero");
    ideal.generators.push_back(std::move(g));
  }
  return {std::move(q), std::move(ideal)};
}

BoundQuiver gen_canonical(const CanonicalSpec& spec) {
  const std::size_t t = spec.weights.size();
  if (t < 2) throw ValidationError("canonical algebra needs at least two branches");
  if (spec.lambdas.size() != t - 2) {
    throw ValidationError("canonical algebra with " + std::to_string(t) + " branches needs " +
                          std::to_string(t - 2) + " parameters");
  }
  for (std::size_t i = 0; i < spec.lambdas.size(); ++i) {
    if (spec.lambdas[i].is_zero()) throw ValidationError("lambda must be nonzero");
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.lambdas[i] == spec.lambdas[j]) throw ValidationError("lambdas must be distinct");
    }
  }
  std::vector<std::vector<Scalar>> linear;
  for (std::size_t i = 2; i < t; ++i) {
    std::vector<Scalar> row(t, Scalar(0));
    row[0] = Scalar(1);
    row[1] = -spec.lambdas[i - 2];
    row[i] = Scalar(-1);
    linear.push_back(std::move(row));
  }
  return gen_toupie(spec.weights, {}, linear);
}

BoundQuiver gen_diamond(std::size_t top, std::size_t bottom) {
  return gen_toupie({top, bottom}, {}, {{Scalar(1), Scalar(-1)}});
}

BoundQuiver gen_generalized_diamond(const std::vector<std::size_t>& lengths) {
  std::vector<std::vector<Scalar>> linear;
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    std::vector<Scalar> row(lengths.size(), Scalar(0));
    row[0] = Scalar(-1);
    row[i] = Scalar(1);
    linear.push_back(std::move(row));
  }
  return gen_toupie(lengths, {}, linear);
}

BoundQuiver gen_radical_square_zero(const Quiver& q) {
  IdealSpec ideal;
  for (const auto& p : enumerate_paths(q, 2)) {
    if (p.length() == 2) ideal.generators.push_back(monomial(p));
  }
  return {q, std::move(ideal)};
}

BoundQuiver gen_string_case(int k) {
  std::vector<ArrowSpec> arrows{{"a", "1", "3"}, {"b", "2", "3"}, {"c", "3", "4"}};
  std::vector<std::vector<std::string>> rels;
  switch (k) {
    case 1:
      rels = {{"a", "c"}, {"b", "c"}};
      break;
    case 2:
      arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "4"}};
      rels = {{"a", "b"}, {"a", "c"}};
      break;
    case 3:
      arrows.push_back({"d", "3", "5"});
      rels = {{"a", "d"}, {"a", "c"}, {"b", "c"}};
      break;
    case 4:
      arrows.push_back({"d", "3", "5"});
      rels = {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
      break;
    default:
      throw ValidationError("string case must be 1, 2, 3 or 4");
  }
  const std::size_t n = k == 1 || k == 2 ? 4 : 5;
  Quiver q(numbered_vertices(n), std::move(arrows));
  IdealSpec ideal;
  for (const auto& r : rels) ideal.generators.push_back(monomial(make_path(q, r)));
  return {std::move(q), std::move(ideal)};
}

RandomRegime parse_regime(const std::string& name) {
  if (name == "acyclic-monomial") return RandomRegime::kAcyclicMonomial;
  if (name == "rsz") return RandomRegime::kRadicalSquareZero;
  if (name == "string-quadratic") return RandomRegime::kStringQuadratic;
  throw ValidationError("unknown regime '" + name +
                        "' (expected acyclic-monomial, rsz or string-quadratic)");
}

std::string to_string(RandomRegime regime) {
  switch (regime) {
    case RandomRegime::kAcyclicMonomial: return "acyclic-monomial";
    case RandomRegime::kRadicalSquareZero: return "rsz";
    case RandomRegime::kStringQuadratic: return "string-quadratic";
  }
  return "?";
}

namespace {

constexpr int kMaxDraws = 1000;

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// One draw; nullopt when rejected.
std::optional<BoundQuiver> draw(std::mt19937_64& rng, const RandomSpec& spec) {
  const std::size_t n = uniform(rng, 1, spec.max_vertices);
  const bool loops = spec.allow_loops && spec.regime != RandomRegime::kAcyclicMonomial;
  if (n == 1 && !loops) {
    if (spec.max_vertices > 1) return std::nullopt;
    return BoundQuiver{Quiver({"1"}, {}), {}};
  }
  if (n - 1 > spec.max_arrows) return std::nullopt;
  const std::size_t k = uniform(rng, std::max<std::size_t>(n - 1, 1), spec.max_arrows);

  std::vector<std::size_t> out_deg(n, 0);
  std::vector<std::size_t> in_deg(n, 0);
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t s = uniform(rng, 0, n - 1);
    std::size_t t = uniform(rng, 0, n - 1);
    if (s == t && !loops) return std::nullopt;
    if (spec.regime == RandomRegime::kAcyclicMonomial && s > t) std::swap(s, t);
    if (spec.regime == RandomRegime::kStringQuadratic && (out_deg[s] == 2 || in_deg[t] == 2)) {
      return std::nullopt;
    }
    ++out_deg[s];
    ++in_deg[t];
    arrows.push_back({indexed("a", i + 1), std::to_string(s + 1), std::to_string(t + 1)});
  }
  std::optional<Quiver> q;
  try {
    q.emplace(numbered_vertices(n), std::move(arrows));
  } catch (const ValidationError&) {
    return std::nullopt;
  }

  BoundQuiver out{*q, {}};
  switch (spec.regime) {
    case RandomRegime::kRadicalSquareZero:
      out = gen_radical_square_zero(*q);
      break;
    case RandomRegime::kAcyclicMonomial: {
      // Each path of length 2 or 3 becomes a generator with probability 1/4,
      // skipping paths that already contain a chosen generator.
      std::vector<Path> chosen;
      for (const auto& p : enumerate_paths(*q, 3)) {
        if (p.length() < 2 || !coin(rng, 0.25)) continue;
        const bool redundant = std::any_of(chosen.begin(), chosen.end(),
                                           [&](const Path& g) { return contains_subpath(p, g); });
        if (redundant) continue;
        chosen.push_back(p);
        out.ideal.generators.push_back(monomial(p));
      }
      break;
    }
    case RandomRegime::kStringQuadratic: {
      // At each vertex, pair every incoming arrow with at most one outgoing
      // arrow; unpaired compositions become relations.
      for (VertexId v = 0; v < q->vertex_count(); ++v) {
        std::vector<ArrowId> outs(q->out_arrows(v).begin(), q->out_arrows(v).end());
        std::shuffle(outs.begin(), outs.end(), rng);
        std::set<std::pair<ArrowId, ArrowId>> allowed;
        std::size_t next = 0;
        for (ArrowId x : q->in_arrows(v)) {
          if (next < outs.size() && coin(rng, 0.5)) allowed.emplace(x, outs[next++]);
        }
        for (ArrowId x : q->in_arrows(v)) {
          for (ArrowId y : q->out_arrows(v)) {
            if (!allowed.contains({x, y})) {
              out.ideal.generators.push_back(
                  monomial(*compose(arrow_path(*q, x), arrow_path(*q, y))));
            }
          }
        }
      }
      break;
    }
  }
  try {
    compute_bound(out.quiver, out.ideal);
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

BoundQuiver gen_random(const RandomSpec& spec) {
  if (spec.max_vertices == 0) throw ValidationError("vertex bound must be at least 1");
  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    if (auto result = draw(rng, spec)) return std::move(*result);
  }
  throw ValidationError("no admissible random instance after " + std::to_string(kMaxDraws) +
                        " draws");
}

}  // namespace frobq
