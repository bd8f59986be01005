#include "frobq/algebra.hpp"

#include <algorithm>

#include "frobq/errors.hpp"

namespace frobq {

namespace {

using Block = std::pair<VertexId, VertexId>;

struct BlockSpace {
  std::vector<Path> columns;  // canonical order
  std::map<Path, std::size_t> column_of;
  std::vector<SparseVec> rows;
};

// Sum of coeff * (u * term * v) over the terms, dropping paths of length
// >= bound. Columns refer to the block of (source(u), target(v)).
SparseVec truncated_row(const PathExpr& g, const Path& u, const Path& v,
                        std::size_t bound, const BlockSpace& space) {
  SparseVec row;
  for (const auto& [term, coeff] : g.terms()) {
    if (u.length() + term.length() + v.length() >= bound) continue;
    const Path full = *compose(*compose(u, term), v);
    accumulate(row, space.column_of.at(full), coeff);
  }
  return row;
}

}  // namespace

std::optional<std::size_t> AlgebraBasis::index_of(const Path& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> AlgebraBasis::block(VertexId s, VertexId t) const {
  std::vector<std::size_t> out;
  for (std::size_t i : starting_.at(s)) {
    if (basis_[i].target() == t) out.push_back(i);
  }
  return out;
}

SparseVec AlgebraBasis::unit(std::size_t i) const {
  if (i >= basis_.size()) throw std::out_of_range("basis index out of range");
  return SparseVec{{i, field_.one()}};
}

SparseVec AlgebraBasis::reduce(const Path& p) const {
  if (!is_valid_path(quiver_, p)) throw ValidationError("path is not in the quiver");
  if (p.length() >= bound_) return {};
  if (const auto i = index_of(p)) return unit(*i);
  const auto it = reductions_.find(p);
  if (it == reductions_.end()) {
    throw InternalFault("no normal form recorded for " + format_path(quiver_, p));
  }
  return it->second;
}

SparseVec AlgebraBasis::reduce(const PathExpr& x) const {
  SparseVec out;
  for (const auto& [p, c] : x.terms()) axpy(out, field_.convert(c), reduce(p));
  return out;
}

SparseVec AlgebraBasis::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const SparseVec& p = product(i, j);
      if (!p.empty()) axpy(out, a * b, p);
    }
  }
  return out;
}

SparseVec AlgebraBasis::one() const {
  SparseVec out;
  for (std::size_t i : vertex_index_) out.emplace(i, field_.one());
  return out;
}

PathExpr AlgebraBasis::to_expr(const SparseVec& x) const {
  // Terms of different blocks cannot share a PathExpr; callers pass
  // single-block coordinates.
  PathExpr e;
  for (const auto& [i, c] : x) e.add(basis_.at(i), c);
  return e;
}

AlgebraBasis compute_basis(const Quiver& q, const IdealSpec& ideal_in, const Field& field) {
  const ValidatedIdeal checked = validate(q, ideal_in);
  AlgebraBasis a(q, field);
  a.ideal_ = convert_ideal(checked.spec, field);
  a.monomial_ = validate(q, a.ideal_).monomial;
  const std::size_t m = compute_bound(q, a.ideal_);
  a.bound_ = m;

  // W = span of paths of length < m, split into (source, target) blocks.
  const std::vector<Path> all = m == 0 ? std::vector<Path>{} : enumerate_paths(q, m - 1);
  std::map<Block, BlockSpace> blocks;
  std::vector<std::vector<const Path*>> by_target(q.vertex_count());
  std::vector<std::vector<const Path*>> by_source(q.vertex_count());
  for (const auto& p : all) {
    auto& space = blocks[{p.source(), p.target()}];
    space.column_of.emplace(p, space.columns.size());
    space.columns.push_back(p);
    by_target[p.target()].push_back(&p);
    by_source[p.source()].push_back(&p);
  }

  // Spanning set of the relation space J = trunc(I).
  for (const auto& g : a.ideal_.generators) {
    const auto [s, t] = *g.endpoints();
    const std::size_t min_len = g.min_length();
    if (min_len >= m) continue;
    const std::size_t slack = m - 1 - min_len;
    for (const Path* u : by_target[s]) {
      if (u->length() > slack) break;  // by_target lists paths by length
      for (const Path* v : by_source[t]) {
        if (u->length() + v->length() > slack) break;
        auto& space = blocks.at({u->source(), v->target()});
        SparseVec row = truncated_row(g, *u, *v, m, space);
        if (!row.empty()) space.rows.push_back(std::move(row));
      }
    }
  }

  // Row reduce each block; pivot columns are eliminated.
  struct Eliminated {
    Path path;
    Block block;
    SparseVec rref_row;
  };
  std::vector<Eliminated> eliminated;
  std::vector<std::pair<Block, SparseVec>> relation_rows;
  for (auto& [key, space] : blocks) {
    std::vector<bool> pivot(space.columns.size(), false);
    if (!space.rows.empty()) {
      SparseMatrix mat(field, 0, space.columns.size());
      for (auto& row : space.rows) mat.push_row(std::move(row));
      const RrefResult r = rref(mat);
      for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        pivot[r.pivots[i]] = true;
        eliminated.push_back({space.columns[r.pivots[i]], key, r.reduced.row(i)});
        relation_rows.emplace_back(key, r.reduced.row(i));
      }
    }
    for (std::size_t c = 0; c < space.columns.size(); ++c) {
      if (!pivot[c]) a.basis_.push_back(space.columns[c]);
    }
  }
  std::sort(a.basis_.begin(), a.basis_.end());
  for (std::size_t i = 0; i < a.basis_.size(); ++i) a.index_.emplace(a.basis_[i], i);

  for (const auto& e : eliminated) {
    const BlockSpace& space = blocks.at(e.block);
    SparseVec nf;
    for (const auto& [c, v] : e.rref_row) {
      const Path& p = space.columns[c];
      if (p == e.path) continue;
      const auto idx = a.index_.find(p);
      if (idx == a.index_.end()) throw InternalFault("reduced row hits another pivot");
      nf.emplace(idx->second, -v);
    }
    a.reductions_.emplace(e.path, std::move(nf));
  }

  a.vertex_index_.resize(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const auto idx = a.index_of(trivial_path(q, v));
    if (!idx) throw InternalFault("trivial path eliminated");
    a.vertex_index_[v] = *idx;
  }
  a.arrow_index_.resize(q.arrow_count());
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto idx = m > 1 ? a.index_of(arrow_path(q, x)) : std::nullopt;
    if (!idx) throw InternalFault("arrow eliminated");
    a.arrow_index_[x] = *idx;
  }
  a.starting_.assign(q.vertex_count(), {});
  a.ending_.assign(q.vertex_count(), {});
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    a.starting_[a.basis_[i].source()].push_back(i);
    a.ending_[a.basis_[i].target()].push_back(i);
  }

  // Certificate: every path of length m lies in I. Acyclic quivers have no
  // such paths; cyclic ones need a monomial generator inside each.
  if (!is_acyclic(q)) {
    const std::vector<Path> mono = a.ideal_.monomial_paths();
    for (const auto& p : all) {
      if (p.length() + 1 != m) continue;
      for (ArrowId x : q.out_arrows(p.target())) {
        const Path longer = *compose(p, arrow_path(q, x));
        const bool killed = std::any_of(mono.begin(), mono.end(), [&](const Path& g) {
          return contains_subpath(longer, g);
        });
        if (!killed) {
          throw InternalFault("bound certificate failed: " + format_path(q, longer) +
                              " survives the monomial relations");
        }
      }
    }
  }

  // Closure: J must be stable under multiplication by arrows on both sides.
  for (const auto& [key, row] : relation_rows) {
    const BlockSpace& space = blocks.at(key);
    for (ArrowId x : q.in_arrows(key.first)) {
      SparseVec image;
      const Path arrow = arrow_path(q, x);
      for (const auto& [c, v] : row) {
        axpy(image, v, a.reduce(*compose(arrow, space.columns[c])));
      }
      if (!image.empty()) throw InternalFault("relation space not closed under left multiplication");
    }
    for (ArrowId x : q.out_arrows(key.second)) {
      SparseVec image;
      const Path arrow = arrow_path(q, x);
      for (const auto& [c, v] : row) {
        axpy(image, v, a.reduce(*compose(space.columns[c], arrow)));
      }
      if (!image.empty()) throw InternalFault("relation space not closed under right multiplication");
    }
  }

  const std::size_t n = a.basis_.size();
  a.products_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (const auto p = compose(a.basis_[i], a.basis_[j])) a.products_[i * n + j] = a.reduce(*p);
    }
  }
  return a;
}

}  // namespace frobq
