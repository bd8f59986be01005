#include "frobq/ideal.hpp"

#include <algorithm>
#include <map>

#include "frobq/errors.hpp"

namespace frobq {

std::vector<Path> IdealSpec::monomial_paths() const {
  std::vector<Path> out;
  for (const auto& g : generators) {
    if (g.is_monomial()) out.push_back(g.terms().begin()->first);
  }
  return out;
}

ValidatedIdeal validate(const Quiver& q, const IdealSpec& ideal) {
  ValidatedIdeal result{ideal, true};
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    const PathExpr& g = ideal.generators[i];
    const std::string where = "generator " + std::to_string(i + 1);
    if (g.is_zero()) throw ValidationError(where + " is zero");
    const auto ends = g.endpoints();
    for (const auto& [path, coeff] : g.terms()) {
      if (!is_valid_path(q, path)) throw ValidationError(where + " contains a path not in the quiver");
      if (path.source() != ends->first || path.target() != ends->second) {
        throw ValidationError(where + " is not a combination of parallel paths");
      }
      if (path.length() < 2) {
        throw ValidationError(where + ": term '" + format_path(q, path) +
                              "' has length < 2, so the ideal is not inside R^2");
      }
    }
    if (!g.is_monomial()) result.monomial = false;
  }
  return result;
}

IdealSpec convert_ideal(const IdealSpec& ideal, const Field& field) {
  IdealSpec out;
  for (const auto& g : ideal.generators) {
    PathExpr h;
    for (const auto& [p, c] : g.terms()) {
      try {
        h.add(p, field.convert(c));
      } catch (const std::domain_error&) {
        throw ValidationError("coefficient " + c.str() + " is not defined in " + field.name());
      }
    }
    if (!h.is_zero()) out.generators.push_back(std::move(h));
  }
  return out;
}

namespace {

// States of the avoidance automaton are proper prefixes of generators that
// can still grow into an occurrence; a transition appends one arrow and
// keeps the longest suffix that is again such a prefix. Reaching a full
// generator kills the walk.
class AvoidanceAutomaton {
 public:
  explicit AvoidanceAutomaton(std::span<const Path> gens) {
    prefixes_.emplace(std::vector<ArrowId>{}, 0);
    for (const auto& g : gens) {
      const auto& w = g.arrows();
      forbidden_.emplace_back(w);
      for (std::size_t k = 0; k < w.size(); ++k) {
        prefixes_.emplace(std::vector<ArrowId>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)), 0);
      }
    }
    std::size_t id = 0;
    for (auto& [word, index] : prefixes_) {
      index = id++;
      words_.push_back(word);
    }
  }

  std::size_t state_count() const { return words_.size(); }
  std::size_t start() const { return prefixes_.at({}); }

  // nullopt when appending the arrow completes a forbidden word.
  std::optional<std::size_t> step(std::size_t state, ArrowId a) const {
    std::vector<ArrowId> w = words_[state];
    w.push_back(a);
    for (std::size_t drop = 0; drop < w.size(); ++drop) {
      const std::vector<ArrowId> suffix(w.begin() + static_cast<std::ptrdiff_t>(drop), w.end());
      if (std::find(forbidden_.begin(), forbidden_.end(), suffix) != forbidden_.end()) {
        return std::nullopt;
      }
    }
    for (std::size_t drop = 0; drop <= w.size(); ++drop) {
      const std::vector<ArrowId> suffix(w.begin() + static_cast<std::ptrdiff_t>(drop), w.end());
      const auto it = prefixes_.find(suffix);
      if (it != prefixes_.end()) return it->second;
    }
    return start();
  }

 private:
  std::vector<std::vector<ArrowId>> forbidden_;
  std::map<std::vector<ArrowId>, std::size_t> prefixes_;
  std::vector<std::vector<ArrowId>> words_;
};

}  // namespace

std::optional<std::size_t> longest_avoiding_path(const Quiver& q,
                                                 std::span<const Path> monomial_gens) {
  for (const auto& g : monomial_gens) {
    if (g.length() < 1) throw ValidationError("monomial generator must be a non-trivial path");
  }
  const AvoidanceAutomaton automaton(monomial_gens);
  const std::size_t states = automaton.state_count();
  // Product state (vertex, automaton state); a walk from (v, start) spells a
  // surviving path starting at v.
  const std::size_t n = q.vertex_count() * states;
  auto encode = [&](VertexId v, std::size_t s) { return v * states + s; };

  std::vector<std::vector<std::size_t>> succ(n);
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    for (std::size_t s = 0; s < states; ++s) {
      for (ArrowId a : q.out_arrows(v)) {
        if (const auto t = automaton.step(s, a)) {
          succ[encode(v, s)].push_back(encode(q.arrow(a).target, *t));
        }
      }
    }
  }

  // Iterative DFS from all start states: cycle detection plus longest walk.
  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(n, Mark::kNew);
  std::vector<std::size_t> longest(n, 0);
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const std::size_t root = encode(v, automaton.start());
    if (mark[root] != Mark::kNew) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::kActive;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < succ[node].size()) {
        const std::size_t child = succ[node][next++];
        if (mark[child] == Mark::kActive) return std::nullopt;
        if (mark[child] == Mark::kNew) {
          mark[child] = Mark::kActive;
          stack.emplace_back(child, 0);
        }
        continue;
      }
      std::size_t best = 0;
      for (std::size_t child : succ[node]) best = std::max(best, longest[child] + 1);
      longest[node] = best;
      mark[node] = Mark::kDone;
      stack.pop_back();
    }
  }
  std::size_t result = 0;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    result = std::max(result, longest[encode(v, automaton.start())]);
  }
  return result;
}

bool monomial_finiteness_check(const Quiver& q, std::span<const Path> monomial_gens) {
  return longest_avoiding_path(q, monomial_gens).has_value();
}

std::size_t compute_bound(const Quiver& q, const IdealSpec& ideal) {
  if (const auto longest = longest_path_length(q)) return *longest + 1;
  const std::vector<Path> mono = ideal.monomial_paths();
  if (const auto survivor = longest_avoiding_path(q, mono)) return *survivor + 1;
  if (ideal.generators.empty()) {
    throw InfiniteDimensional("cyclic quiver with no relations: kQ is infinite dimensional");
  }
  throw UnsupportedRegime(
      "cyclic quiver whose monomial relations do not bound path length; "
      "finiteness cannot be certified");
}

}  // namespace frobq
