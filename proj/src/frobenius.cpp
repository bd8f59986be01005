#include "frobq/frobenius.hpp"

#include <algorithm>

#include "frobq/errors.hpp"

namespace frobq {

void accumulate(TensorElement& t, const BasisPair& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = t.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) t.erase(it);
  }
}

void axpy(TensorElement& y, const Scalar& a, const TensorElement& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) accumulate(y, k, a * v);
}

TensorElement left_multiply(const AlgebraBasis& a, const SparseVec& x, const TensorElement& t) {
  TensorElement out;
  for (const auto& [i, cx] : x) {
    for (const auto& [key, ct] : t) {
      for (const auto& [k, cp] : a.product(i, key.first)) {
        accumulate(out, {k, key.second}, cx * ct * cp);
      }
    }
  }
  return out;
}

TensorElement right_multiply(const AlgebraBasis& a, const TensorElement& t, const SparseVec& y) {
  TensorElement out;
  for (const auto& [j, cy] : y) {
    for (const auto& [key, ct] : t) {
      for (const auto& [k, cp] : a.product(key.second, j)) {
        accumulate(out, {key.first, k}, cy * ct * cp);
      }
    }
  }
  return out;
}

bool CoproductCandidate::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const TensorElement& t) { return t.empty(); });
}

namespace {

std::vector<Unknown> make_legend(const AlgebraBasis& a, SupportMode mode) {
  std::vector<Unknown> legend;
  const Quiver& q = a.quiver();
  for (VertexId p = 0; p < q.vertex_count(); ++p) {
    if (mode == SupportMode::kRestricted) {
      for (std::size_t u : a.starting_at(p)) {
        for (std::size_t v : a.ending_at(p)) legend.push_back({p, u, v});
      }
    } else {
      for (std::size_t u = 0; u < a.dimension(); ++u) {
        for (std::size_t v = 0; v < a.dimension(); ++v) legend.push_back({p, u, v});
      }
    }
  }
  return legend;
}

// Rows keyed by (tag, w, z); the tag separates equation families.
using RowKey = std::tuple<std::size_t, std::size_t, std::size_t>;

}  // namespace

ConstraintSystem build_constraint_system(const AlgebraBasis& a, SupportMode mode) {
  const Quiver& q = a.quiver();
  ConstraintSystem sys;
  sys.legend = make_legend(a, mode);

  // Columns of each vertex, as (column, left, right).
  std::vector<std::vector<std::size_t>> columns_of(q.vertex_count());
  for (std::size_t c = 0; c < sys.legend.size(); ++c) {
    columns_of[sys.legend[c].vertex].push_back(c);
  }

  std::map<RowKey, SparseVec> rows;
  auto add = [&](std::size_t tag, std::size_t w, std::size_t z, std::size_t col, const Scalar& v) {
    accumulate(rows[{tag, w, z}], col, v);
  };
  const Scalar minus_one = -a.field().one();

  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const std::size_t alpha = a.arrow_index(x);
    const VertexId p = q.arrow(x).source;
    const VertexId t = q.arrow(x).target;
    // (alpha (x) 1) Delta(e_t)
    for (std::size_t c : columns_of[t]) {
      const Unknown& u = sys.legend[c];
      for (const auto& [k, coeff] : a.product(alpha, u.left)) add(x, k, u.right, c, coeff);
    }
    // - Delta(e_p) (1 (x) alpha)
    for (std::size_t c : columns_of[p]) {
      const Unknown& u = sys.legend[c];
      for (const auto& [k, coeff] : a.product(u.right, alpha)) {
        add(x, u.left, k, c, minus_one * coeff);
      }
    }
  }

  if (mode == SupportMode::kUnrestricted) {
    // (e_p (x) 1) Delta(e_p) - Delta(e_p) and Delta(e_p) (1 (x) e_p) - Delta(e_p).
    const std::size_t base = q.arrow_count();
    for (VertexId p = 0; p < q.vertex_count(); ++p) {
      const std::size_t ep = a.vertex_index(p);
      for (std::size_t c : columns_of[p]) {
        const Unknown& u = sys.legend[c];
        for (const auto& [k, coeff] : a.product(ep, u.left)) add(base + 2 * p, k, u.right, c, coeff);
        add(base + 2 * p, u.left, u.right, c, minus_one);
        for (const auto& [k, coeff] : a.product(u.right, ep)) add(base + 2 * p + 1, u.left, k, c, coeff);
        add(base + 2 * p + 1, u.left, u.right, c, minus_one);
      }
    }
  }

  sys.matrix = SparseMatrix(a.field(), 0, sys.legend.size());
  for (auto& [key, row] : rows) {
    if (!row.empty()) sys.matrix.push_row(std::move(row));
  }
  return sys;
}

CoproductCandidate candidate_from_vector(const AlgebraBasis& a, const std::vector<Unknown>& legend,
                                         const SparseVec& v) {
  CoproductCandidate c(a.quiver().vertex_count());
  for (const auto& [col, coeff] : v) {
    const Unknown& u = legend.at(col);
    accumulate(c.at(u.vertex), {u.left, u.right}, coeff);
  }
  return c;
}

SparseVec candidate_to_vector(const std::vector<Unknown>& legend, const CoproductCandidate& c) {
  std::map<Unknown, std::size_t> column;
  for (std::size_t i = 0; i < legend.size(); ++i) column.emplace(legend[i], i);
  SparseVec out;
  for (VertexId p = 0; p < c.vertex_count(); ++p) {
    for (const auto& [key, coeff] : c.at(p)) {
      const auto it = column.find({p, key.first, key.second});
      if (it == column.end()) throw ValidationError("candidate term outside the unknown set");
      accumulate(out, it->second, coeff);
    }
  }
  return out;
}

FrobeniusSpace solve_frobenius_space(const AlgebraBasis& a) {
  const ConstraintSystem sys = build_constraint_system(a);
  const KernelBasis kernel = kernel_basis(sys.matrix);
  FrobeniusSpace space;
  space.dimension = kernel.dimension;
  for (const auto& v : kernel.vectors) {
    CoproductCandidate c = candidate_from_vector(a, sys.legend, v);
    const VerifyResult check = verify_coproduct(a, c);
    if (!check.ok()) {
      throw InternalFault("kernel vector fails verification: " + check.message);
    }
    space.basis.push_back(std::move(c));
  }
  return space;
}

std::size_t frobenius_dimension(const AlgebraBasis& a) {
  const ConstraintSystem sys = build_constraint_system(a);
  return sys.matrix.cols() - rank(sys.matrix);
}

TensorElement extend_coproduct(const AlgebraBasis& a, const CoproductCandidate& c, std::size_t w) {
  const Path& path = a.path(w);
  if (c.vertex_count() != a.quiver().vertex_count()) {
    throw ValidationError("candidate belongs to a different quiver");
  }
  if (path.is_trivial()) return c.at(path.source());
  return left_multiply(a, a.unit(w), c.at(path.target()));
}

namespace {

class Verifier {
 public:
  Verifier(const AlgebraBasis& a, const CoproductCandidate& c) : a_(a), c_(c) {
    delta_.reserve(a.dimension());
    for (std::size_t w = 0; w < a.dimension(); ++w) delta_.push_back(extend_coproduct(a, c, w));
  }

  TensorElement delta(const SparseVec& x) const {
    TensorElement out;
    for (const auto& [i, coeff] : x) axpy(out, coeff, delta_[i]);
    return out;
  }

  // 0 when both equations hold, 1 or 2 for the first one that fails.
  int check(std::size_t x, std::size_t y, TensorElement* lhs, TensorElement* rhs) const {
    TensorElement product_side = delta(a_.product(x, y));
    TensorElement left = left_multiply(a_, a_.unit(x), delta_[y]);
    if (product_side != left) {
      if (lhs) *lhs = std::move(product_side);
      if (rhs) *rhs = std::move(left);
      return 1;
    }
    TensorElement right = right_multiply(a_, delta_[x], a_.unit(y));
    if (product_side != right) {
      if (lhs) *lhs = std::move(product_side);
      if (rhs) *rhs = std::move(right);
      return 2;
    }
    return 0;
  }

 private:
  const AlgebraBasis& a_;
  const CoproductCandidate& c_;
  std::vector<TensorElement> delta_;
};

std::optional<VerifyResult> support_violation(const AlgebraBasis& a, const CoproductCandidate& c) {
  if (c.vertex_count() != a.quiver().vertex_count()) {
    VerifyResult r;
    r.status = VerifyResult::Status::kSupportViolation;
    r.message = "candidate has " + std::to_string(c.vertex_count()) + " vertices, algebra has " +
                std::to_string(a.quiver().vertex_count());
    return r;
  }
  for (VertexId p = 0; p < c.vertex_count(); ++p) {
    for (const auto& [key, coeff] : c.at(p)) {
      const bool in_range = key.first < a.dimension() && key.second < a.dimension();
      if (in_range && a.path(key.first).source() == p && a.path(key.second).target() == p &&
          a.field().contains(coeff)) {
        continue;
      }
      VerifyResult r;
      r.status = VerifyResult::Status::kSupportViolation;
      r.vertex = p;
      r.message = "Delta(e_" + a.quiver().vertex_name(p) + ") has a term outside the block " +
                  "source(left) = target(right) = " + a.quiver().vertex_name(p);
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyResult verify_coproduct(const AlgebraBasis& a, const CoproductCandidate& c) {
  if (auto bad = support_violation(a, c)) return *bad;
  const Verifier verifier(a, c);
  for (std::size_t x = 0; x < a.dimension(); ++x) {
    for (std::size_t y = 0; y < a.dimension(); ++y) {
      VerifyResult r;
      const int failed = verifier.check(x, y, &r.lhs, &r.rhs);
      if (failed == 0) continue;
      r.status = VerifyResult::Status::kNotBimoduleMap;
      r.x = x;
      r.y = y;
      const Quiver& q = a.quiver();
      const std::string xs = format_path(q, a.path(x));
      const std::string ys = format_path(q, a.path(y));
      r.message = "pair (" + xs + ", " + ys + "): Delta(" + xs + "*" + ys + ") = " +
                  format_tensor(a, r.lhs) + " but " +
                  (failed == 1 ? "(" + xs + " (x) 1) Delta(" + ys + ")"
                               : "Delta(" + xs + ") (1 (x) " + ys + ")") +
                  " = " + format_tensor(a, r.rhs);
      return r;
    }
  }
  return {};
}

bool check_pair(const AlgebraBasis& a, const CoproductCandidate& c, std::size_t x, std::size_t y) {
  if (support_violation(a, c)) return false;
  return Verifier(a, c).check(x, y, nullptr, nullptr) == 0;
}

std::string format_tensor(const AlgebraBasis& a, const TensorElement& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [key, coeff] : t) {
    const bool negative = coeff.sign() < 0;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const Scalar magnitude = negative ? -coeff : coeff;
    if (!magnitude.is_one()) s += magnitude.str() + " ";
    s += format_path(a.quiver(), a.path(key.first)) + " (x) " +
         format_path(a.quiver(), a.path(key.second));
  }
  return s;
}

}  // namespace frobq
