#include "frobq/closed_forms.hpp"

#include <algorithm>

#include "frobq/errors.hpp"
#include "frobq/linalg.hpp"

namespace frobq {

bool is_radical_square_zero(const AlgebraBasis& a) {
  return std::all_of(a.paths().begin(), a.paths().end(),
                     [](const Path& p) { return p.length() < 2; });
}

bool is_radical_square_zero(const Quiver& q, const IdealSpec& ideal) {
  return is_radical_square_zero(compute_basis(q, ideal));
}

RszFormula radical_square_zero_formula(const Quiver& q) {
  if (q.arrow_count() == 0) throw ValidationError("quiver has no arrows");
  const std::size_t n = q.vertex_count();
  const std::size_t width = n + q.arrow_count();
  // Formal elements: trivial path of v is v, arrow x is n + x.
  auto pair = [&](std::size_t x, std::size_t y) { return x * width + y; };
  auto arrow = [&](ArrowId x) { return n + x; };
  const Field field = Field::rationals();

  std::vector<SparseVec> num;
  std::vector<SparseVec> den;
  auto unit = [&](std::size_t i) { return SparseVec{{i, field.one()}}; };

  for (VertexId p = 0; p < n; ++p) {
    const auto out = q.out_arrows(p);
    const auto in = q.in_arrows(p);
    for (ArrowId x : out) {
      num.push_back(unit(pair(arrow(x), p)));  // V_p (x) e_p
      for (ArrowId y : in) num.push_back(unit(pair(arrow(x), arrow(y))));
    }
    for (ArrowId y : in) num.push_back(unit(pair(p, arrow(y))));  // e_p (x) W_p
    if (out.size() >= 2) {
      for (ArrowId x : out) den.push_back(unit(pair(arrow(x), p)));
    }
    if (in.size() >= 2) {
      for (ArrowId y : in) den.push_back(unit(pair(p, arrow(y))));
    }
  }
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const Arrow& ar = q.arrow(x);
    SparseVec u;
    accumulate(u, pair(arrow(x), ar.source), field.one());
    accumulate(u, pair(ar.target, arrow(x)), -field.one());
    den.push_back(std::move(u));
  }

  auto rank_of = [&](const std::vector<SparseVec>& rows) {
    SparseMatrix m(field, 0, width * width);
    for (const auto& r : rows) m.push_row(r);
    return rank(m);
  };
  std::vector<SparseVec> both = num;
  both.insert(both.end(), den.begin(), den.end());
  RszFormula f;
  f.numerator = rank_of(num);
  const std::size_t d = rank_of(den);
  const std::size_t sum = rank_of(both);
  f.denominator = f.numerator + d - sum;
  f.dimension = f.numerator - f.denominator;
  return f;
}

std::size_t radical_square_zero_dimension(const Quiver& q) {
  return radical_square_zero_formula(q).dimension;
}

namespace {

bool product_vanishes(const AlgebraBasis& a, ArrowId x, ArrowId y) {
  const auto p = compose(arrow_path(a.quiver(), x), arrow_path(a.quiver(), y));
  return !p || a.reduce(*p).empty();
}

Path product_path(const Quiver& q, ArrowId x, ArrowId y) {
  return *compose(arrow_path(q, x), arrow_path(q, y));
}

}  // namespace

bool degree_condition(const Quiver& q) {
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const Degrees d = degrees(q, v);
    if (d.in > 2 || d.out > 2) return false;
  }
  return true;
}

bool continuation_condition(const AlgebraBasis& a) {
  const Quiver& q = a.quiver();
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    std::size_t after = 0;
    for (ArrowId y : q.out_arrows(q.arrow(x).target)) after += product_vanishes(a, x, y) ? 0 : 1;
    std::size_t before = 0;
    for (ArrowId y : q.in_arrows(q.arrow(x).source)) before += product_vanishes(a, y, x) ? 0 : 1;
    if (after > 1 || before > 1) return false;
  }
  return true;
}

bool is_string(const AlgebraBasis& a) {
  return a.is_monomial() && degree_condition(a.quiver()) && continuation_condition(a);
}

bool is_string_quadratic(const AlgebraBasis& a) {
  if (!is_string(a)) return false;
  const auto& gens = a.ideal().generators;
  return std::all_of(gens.begin(), gens.end(),
                     [](const PathExpr& g) { return g.max_length() == 2; });
}

bool is_gentle(const AlgebraBasis& a) {
  if (!is_string_quadratic(a)) return false;
  const Quiver& q = a.quiver();
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    std::size_t after = 0;
    for (ArrowId y : q.out_arrows(q.arrow(x).target)) after += product_vanishes(a, x, y) ? 1 : 0;
    std::size_t before = 0;
    for (ArrowId y : q.in_arrows(q.arrow(x).source)) before += product_vanishes(a, y, x) ? 1 : 0;
    if (after > 1 || before > 1) return false;
  }
  return true;
}

CoproductCandidate string_relation_witness(const AlgebraBasis& a, const Path& r) {
  const Quiver& q = a.quiver();
  if (!a.is_monomial()) throw ValidationError("ideal is not generated by paths");
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const Degrees d = degrees(q, v);
    if (d.in > 2 || d.out > 2) {
      throw ValidationError("not a string algebra: vertex " + q.vertex_name(v) + " has " +
                            std::to_string(d.in) + " incoming and " + std::to_string(d.out) +
                            " outgoing arrows");
    }
  }
  if (!continuation_condition(a)) {
    throw ValidationError("not a string algebra: some arrow has two nonzero continuations");
  }
  const auto gens = a.ideal().monomial_paths();
  if (std::find(gens.begin(), gens.end(), r) == gens.end()) {
    throw ValidationError(format_path(q, r) + " is not a monomial generator");
  }
  // Length 2 is the local-pattern case: the head arrow may continue elsewhere.
  if (r.length() < 3) {
    throw ValidationError(format_path(q, r) + " has length " + std::to_string(r.length()) +
                          "; the relation witness needs length >= 3");
  }

  const auto& arrows = r.arrows();
  CoproductCandidate c(q.vertex_count());
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    const Path head = make_path(q, std::vector<ArrowId>(arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(i)));
    const Path tail = make_path(q, std::vector<ArrowId>(arrows.begin() + static_cast<std::ptrdiff_t>(i), arrows.end()));
    const SparseVec left = a.reduce(tail);
    const SparseVec right = a.reduce(head);
    TensorElement& slot = c.at(head.target());
    for (const auto& [u, cu] : left) {
      for (const auto& [v, cv] : right) accumulate(slot, {u, v}, cu * cv);
    }
  }
  if (c.is_zero()) throw VerificationError("witness for " + format_path(q, r) + " vanishes");
  const VerifyResult check = verify_coproduct(a, c);
  if (!check.ok()) {
    throw VerificationError("witness for " + format_path(q, r) + " fails: " + check.message);
  }
  return c;
}

std::vector<LocalPatternMatch> detect_local_patterns(const AlgebraBasis& a) {
  const Quiver& q = a.quiver();
  std::vector<LocalPatternMatch> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const auto in = q.in_arrows(v);
    const auto outs = q.out_arrows(v);
    if (in.empty() || outs.empty() || in.size() > 2 || outs.size() > 2) continue;

    LocalPatternMatch m;
    m.vertex = v;
    m.in_arrows.assign(in.begin(), in.end());
    m.out_arrows.assign(outs.begin(), outs.end());
    // An out-arrow killed by every in-arrow, and an in-arrow killing every
    // out-arrow.
    std::optional<ArrowId> killed_out;
    std::optional<ArrowId> killing_in;
    std::size_t zeros = 0;
    for (ArrowId x : in) {
      bool kills_all = true;
      for (ArrowId y : outs) {
        if (product_vanishes(a, x, y)) {
          ++zeros;
          m.zero_products.push_back(product_path(q, x, y));
        } else {
          kills_all = false;
        }
      }
      if (kills_all && !killing_in) killing_in = x;
    }
    for (ArrowId y : outs) {
      const bool killed = std::all_of(in.begin(), in.end(),
                                      [&](ArrowId x) { return product_vanishes(a, x, y); });
      if (killed && !killed_out) killed_out = y;
    }

    const std::size_t total = in.size() * outs.size();
    if (in.size() == 2 && outs.size() == 2) {
      if (zeros == 4) {
        m.pattern = 4;
      } else if (zeros == 3) {
        m.pattern = 3;
      } else {
        continue;
      }
    } else if (zeros != total) {
      continue;
    } else if (in.size() == 2) {
      m.pattern = 1;
    } else if (outs.size() == 2) {
      m.pattern = 2;
    } else {
      m.pattern = 5;
    }
    if (!killed_out || !killing_in) continue;
    m.left = *killed_out;
    m.right = *killing_in;
    out.push_back(std::move(m));
  }
  return out;
}

CoproductCandidate witness_coproduct(const AlgebraBasis& a, const LocalPatternMatch& m) {
  CoproductCandidate c(a.quiver().vertex_count());
  c.at(m.vertex)[{a.arrow_index(m.left), a.arrow_index(m.right)}] = a.field().one();
  const VerifyResult check = verify_coproduct(a, c);
  if (!check.ok()) {
    throw VerificationError("pattern preconditions not satisfied by ideal: " + check.message);
  }
  return c;
}

std::optional<ToupieShape> toupie_shape(const Quiver& q) {
  std::optional<VertexId> source;
  std::optional<VertexId> sink;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const Degrees d = degrees(q, v);
    if (d.in == 0) {
      if (source) return std::nullopt;
      source = v;
    } else if (d.out == 0) {
      if (sink) return std::nullopt;
      sink = v;
    } else if (d.in != 1 || d.out != 1) {
      return std::nullopt;
    }
  }
  if (!source || !sink) return std::nullopt;
  ToupieShape shape{*source, *sink, {}};
  for (ArrowId first : q.out_arrows(*source)) {
    std::vector<ArrowId> branch{first};
    while (q.arrow(branch.back()).target != *sink) {
      if (branch.size() > q.arrow_count()) return std::nullopt;
      branch.push_back(q.out_arrows(q.arrow(branch.back()).target).front());
    }
    shape.branches.push_back(std::move(branch));
  }
  return shape;
}

ToupieClassification toupie_classify(const AlgebraBasis& a) {
  const Quiver& q = a.quiver();
  auto shape = toupie_shape(q);
  if (!shape) throw ValidationError("not a toupie quiver");
  const std::size_t t = shape->branches.size();

  std::vector<std::size_t> branch_of(q.arrow_count());
  for (std::size_t b = 0; b < t; ++b) {
    for (ArrowId x : shape->branches[b]) branch_of[x] = b;
  }

  ToupieClassification c;
  c.monomial_branch.assign(t, false);
  SparseMatrix linear(a.field(), 0, t);
  for (const auto& g : a.ideal().generators) {
    if (g.is_monomial()) {
      c.monomial_branch[branch_of[g.terms().begin()->first.arrows().front()]] = true;
      continue;
    }
    SparseVec row;
    for (const auto& [p, coeff] : g.terms()) {
      const std::size_t b = branch_of[p.arrows().front()];
      if (p.arrows() != shape->branches[b]) {
        throw ValidationError("relation term " + format_path(q, p) + " is not a full branch");
      }
      accumulate(row, b, coeff);
    }
    linear.push_row(std::move(row));
  }
  const std::size_t r = rank(linear);
  for (std::size_t b = 0; b < t; ++b) {
    if (c.monomial_branch[b]) continue;
    SparseMatrix extended = linear;
    extended.push_row(SparseVec{{b, a.field().one()}});
    if (rank(extended) == r) c.monomial_branch[b] = true;
  }
  c.monomial_count = static_cast<std::size_t>(
      std::count(c.monomial_branch.begin(), c.monomial_branch.end(), true));
  c.independent_count = t - r;

  if (c.monomial_count > 0) {
    c.kind = ToupieKind::kMPositive;
    c.predicted = 1;
    c.at_least = true;
  } else if (t == 1) {
    c.kind = ToupieKind::kLinearAn;
    c.predicted = 1;
  } else if (c.independent_count == 1) {
    c.kind = ToupieKind::kGeneralizedDiamond;
    c.predicted = 1;
  } else {
    c.kind = ToupieKind::kMZeroOther;
    c.predicted = 0;
  }
  c.shape = std::move(*shape);
  return c;
}

std::string to_string(ToupieKind kind) {
  switch (kind) {
    case ToupieKind::kLinearAn: return "LINEAR_An";
    case ToupieKind::kGeneralizedDiamond: return "GENERALIZED_DIAMOND";
    case ToupieKind::kMZeroOther: return "M_ZERO_OTHER";
    case ToupieKind::kMPositive: return "M_POSITIVE";
  }
  return "?";
}

std::string prediction_string(const ToupieClassification& c) {
  return (c.at_least ? ">= " : "= ") + std::to_string(c.predicted);
}

CoproductCandidate linear_structure(const AlgebraBasis& a, const ToupieShape& shape) {
  const Quiver& q = a.quiver();
  CoproductCandidate c(q.vertex_count());
  if (shape.branches.empty()) return c;
  const Field& f = a.field();
  const SparseVec first = a.reduce(make_path(q, shape.branches.front()));
  const std::size_t e0 = a.vertex_index(shape.source);
  const std::size_t ew = a.vertex_index(shape.sink);
  for (const auto& [i, coeff] : first) {
    accumulate(c.at(shape.source), {i, e0}, coeff);
    accumulate(c.at(shape.sink), {ew, i}, coeff);
  }
  for (const auto& branch : shape.branches) {
    // Scale by 1/mu when this branch equals mu times the first one.
    Scalar scale = f.one();
    const SparseVec own = a.reduce(make_path(q, branch));
    const auto lead = own.empty() ? first.end() : first.find(own.begin()->first);
    if (lead != first.end()) {
      const Scalar mu = own.begin()->second / lead->second;
      SparseVec scaled;
      axpy(scaled, mu, first);
      if (scaled == own) scale = mu.inverse();
    }
    for (std::size_t k = 1; k < branch.size(); ++k) {
      const auto mid = branch.begin() + static_cast<std::ptrdiff_t>(k);
      const SparseVec head = a.reduce(make_path(q, std::vector<ArrowId>(branch.begin(), mid)));
      const SparseVec tail = a.reduce(make_path(q, std::vector<ArrowId>(mid, branch.end())));
      TensorElement& slot = c.at(q.arrow(branch[k - 1]).target);
      for (const auto& [u, cu] : tail) {
        for (const auto& [v, cv] : head) accumulate(slot, {u, v}, scale * cu * cv);
      }
    }
  }
  return c;
}

}  // namespace frobq
