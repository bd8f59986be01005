#include "frobq/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "frobq/errors.hpp"

namespace frobq {

namespace {

void check_identifier(const std::string& id, const char* what) {
  if (id.empty()) throw ValidationError(std::string("empty ") + what + " identifier");
  for (char c : id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      throw ValidationError(std::string(what) + " identifier '" + id +
                            "' contains whitespace");
    }
  }
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ValidationError("quiver has no vertices");
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    check_identifier(vertices_[v], "vertex");
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      throw ValidationError("duplicate vertex '" + vertices_[v] + "'");
    }
  }

  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowSpec& a, const ArrowSpec& b) { return a.name < b.name; });
  for (const auto& spec : arrows) {
    check_identifier(spec.name, "arrow");
    if (arrow_index_.contains(spec.name)) {
      throw ValidationError("duplicate arrow '" + spec.name + "'");
    }
    const auto s = find_vertex(spec.source);
    const auto t = find_vertex(spec.target);
    if (!s) throw ValidationError("arrow '" + spec.name + "': unknown vertex '" + spec.source + "'");
    if (!t) throw ValidationError("arrow '" + spec.name + "': unknown vertex '" + spec.target + "'");
    arrow_index_.emplace(spec.name, arrows_.size());
    arrows_.push_back({spec.name, *s, *t});
  }

  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (ArrowId a = 0; a < arrows_.size(); ++a) {
    out_[arrows_[a].source].push_back(a);
    in_[arrows_[a].target].push_back(a);
  }

  // Connectivity of the underlying undirected graph.
  std::vector<VertexId> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = vertices_.size();
  for (const auto& a : arrows_) {
    const VertexId x = find(a.source);
    const VertexId y = find(a.target);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  if (components != 1) throw ValidationError("quiver is not connected");
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  const auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  const auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Quiver::vertex(std::string_view name) const {
  const auto v = find_vertex(name);
  if (!v) throw ValidationError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

ArrowId Quiver::arrow_id(std::string_view name) const {
  const auto a = find_arrow(name);
  if (!a) throw ValidationError("unknown arrow '" + std::string(name) + "'");
  return *a;
}

std::vector<ArrowSpec> Quiver::arrow_specs() const {
  std::vector<ArrowSpec> out;
  out.reserve(arrows_.size());
  for (const auto& a : arrows_) {
    out.push_back({a.name, vertices_[a.source], vertices_[a.target]});
  }
  return out;
}

std::strong_ordering Path::operator<=>(const Path& rhs) const {
  if (auto c = length() <=> rhs.length(); c != 0) return c;
  if (auto c = arrows_ <=> rhs.arrows_; c != 0) return c;
  if (auto c = source_ <=> rhs.source_; c != 0) return c;
  return target_ <=> rhs.target_;
}

Path trivial_path(const Quiver& q, VertexId v) {
  if (v >= q.vertex_count()) {
    throw ValidationError("unknown vertex index " + std::to_string(v));
  }
  Path p;
  p.source_ = p.target_ = v;
  return p;
}

Path trivial_path(const Quiver& q, std::string_view vertex) {
  return trivial_path(q, q.vertex(vertex));
}

Path make_path(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw ValidationError("empty arrow sequence; use trivial_path");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k] >= q.arrow_count()) {
      throw ValidationError("unknown arrow index " + std::to_string(arrows[k]));
    }
    if (k > 0 && q.arrow(arrows[k - 1]).target != q.arrow(arrows[k]).source) {
      throw ValidationError("arrows '" + q.arrow(arrows[k - 1]).name + "' and '" +
                            q.arrow(arrows[k]).name + "' do not compose");
    }
  }
  Path p;
  p.source_ = q.arrow(arrows.front()).source;
  p.target_ = q.arrow(arrows.back()).target;
  p.arrows_ = std::move(arrows);
  return p;
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrows) {
  std::vector<ArrowId> ids;
  ids.reserve(arrows.size());
  for (const auto& name : arrows) ids.push_back(q.arrow_id(name));
  return make_path(q, std::move(ids));
}

Path arrow_path(const Quiver& q, ArrowId a) { return make_path(q, std::vector<ArrowId>{a}); }

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target_ != q.source_) return std::nullopt;
  Path r;
  r.source_ = p.source_;
  r.target_ = q.target_;
  r.arrows_.reserve(p.arrows_.size() + q.arrows_.size());
  r.arrows_.insert(r.arrows_.end(), p.arrows_.begin(), p.arrows_.end());
  r.arrows_.insert(r.arrows_.end(), q.arrows_.begin(), q.arrows_.end());
  return r;
}

bool is_valid_path(const Quiver& q, const Path& p) {
  if (p.source() >= q.vertex_count() || p.target() >= q.vertex_count()) return false;
  if (p.is_trivial()) return p.source() == p.target();
  const auto& a = p.arrows();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] >= q.arrow_count()) return false;
    if (k > 0 && q.arrow(a[k - 1]).target != q.arrow(a[k]).source) return false;
  }
  return q.arrow(a.front()).source == p.source() && q.arrow(a.back()).target == p.target();
}

bool contains_subpath(const Path& p, const Path& w) {
  if (w.is_trivial() || w.length() > p.length()) return false;
  return std::search(p.arrows().begin(), p.arrows().end(), w.arrows().begin(),
                     w.arrows().end()) != p.arrows().end();
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len) {
  std::vector<Path> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) out.push_back(trivial_path(q, v));
  // Trivial paths sort by source only; vertex order is already ascending.
  std::vector<Path> frontier;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) frontier.push_back(arrow_path(q, a));
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    // Arrow ids ascend, and extensions of a sorted level stay sorted.
    std::vector<Path> next;
    for (const auto& p : frontier) {
      out.push_back(p);
      if (len == max_len) continue;
      for (ArrowId a : q.out_arrows(p.target())) {
        next.push_back(*compose(p, arrow_path(q, a)));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

// Kahn's algorithm; returns a topological order or nullopt on a cycle.
std::optional<std::vector<VertexId>> topological_order(const Quiver& q) {
  std::vector<std::size_t> indeg(q.vertex_count(), 0);
  for (const auto& a : q.arrows()) ++indeg[a.target];
  std::vector<VertexId> order;
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (ArrowId a : q.out_arrows(v)) {
      if (--indeg[q.arrow(a).target] == 0) ready.push_back(q.arrow(a).target);
    }
  }
  if (order.size() != q.vertex_count()) return std::nullopt;
  return order;
}

}  // namespace

bool is_acyclic(const Quiver& q) { return topological_order(q).has_value(); }

std::optional<std::size_t> longest_path_length(const Quiver& q) {
  const auto order = topological_order(q);
  if (!order) return std::nullopt;
  std::vector<std::size_t> best(q.vertex_count(), 0);
  std::size_t longest = 0;
  for (VertexId v : *order) {
    for (ArrowId a : q.out_arrows(v)) {
      const VertexId t = q.arrow(a).target;
      best[t] = std::max(best[t], best[v] + 1);
      longest = std::max(longest, best[t]);
    }
  }
  return longest;
}

Degrees degrees(const Quiver& q, VertexId v) {
  if (v >= q.vertex_count()) throw ValidationError("unknown vertex index " + std::to_string(v));
  return {q.in_arrows(v).size(), q.out_arrows(v).size()};
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.source());
  std::string s;
  for (ArrowId a : p.arrows()) {
    if (!s.empty()) s += '*';
    s += q.arrow(a).name;
  }
  return s;
}

void PathExpr::add(const Path& p, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (const auto ends = endpoints(); ends && (ends->first != p.source() || ends->second != p.target())) {
    throw ValidationError("non-parallel terms in a linear combination of paths");
  }
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::pair<VertexId, VertexId>> PathExpr::endpoints() const {
  if (terms_.empty()) return std::nullopt;
  const Path& p = terms_.begin()->first;
  return std::pair{p.source(), p.target()};
}

std::size_t PathExpr::min_length() const {
  return terms_.empty() ? 0 : terms_.begin()->first.length();
}

std::size_t PathExpr::max_length() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

}  // namespace frobq
