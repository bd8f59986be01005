#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobq/scalar.hpp"

namespace frobq {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

// Arrow declaration by vertex names, as written in a document.
struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

// A finite connected quiver. Loops and parallel arrows are allowed.
//
// Vertices keep their declaration order. Arrows are stored sorted by
// identifier, so ArrowId order is the lexicographic identifier order and
// paths compare canonically without consulting names.
class Quiver {
 public:
  // Throws ValidationError on empty/duplicate identifiers, unknown
  // endpoints, an empty vertex set, or a disconnected underlying graph.
  Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;
  // Throws ValidationError("unknown vertex ...").
  VertexId vertex(std::string_view name) const;
  ArrowId arrow_id(std::string_view name) const;

  std::span<const ArrowId> out_arrows(VertexId v) const { return out_.at(v); }
  std::span<const ArrowId> in_arrows(VertexId v) const { return in_.at(v); }

  std::vector<ArrowSpec> arrow_specs() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, ArrowId, std::less<>> arrow_index_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

// A path of a fixed quiver: trivial (no arrows, source == target) or a
// composable arrow sequence read left to right.
//
// Ordering is the canonical path order: length, then arrow sequence, then
// source vertex (which only separates trivial paths).
class Path {
 public:
  Path() = default;

  VertexId source() const noexcept { return source_; }
  VertexId target() const noexcept { return target_; }
  const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }
  std::size_t length() const noexcept { return arrows_.size(); }
  bool is_trivial() const noexcept { return arrows_.empty(); }

  std::strong_ordering operator<=>(const Path& rhs) const;
  bool operator==(const Path& rhs) const = default;

 private:
  friend Path trivial_path(const Quiver&, VertexId);
  friend Path make_path(const Quiver&, std::vector<ArrowId>);
  friend std::optional<Path> compose(const Path&, const Path&);

  VertexId source_ = 0;
  VertexId target_ = 0;
  std::vector<ArrowId> arrows_;
};

Path trivial_path(const Quiver& q, VertexId v);
Path trivial_path(const Quiver& q, std::string_view vertex);
// Non-empty composable arrow sequence; throws ValidationError otherwise.
Path make_path(const Quiver& q, std::vector<ArrowId> arrows);
// Arrow sequence by identifier, e.g. {"a", "b"}.
Path make_path(const Quiver& q, const std::vector<std::string>& arrows);
Path arrow_path(const Quiver& q, ArrowId a);

// Concatenation; nullopt when target(p) != source(q).
std::optional<Path> compose(const Path& p, const Path& q);

// True when every arrow id is in range and consecutive arrows compose.
bool is_valid_path(const Quiver& q, const Path& p);

// True when w occurs in p as a contiguous block of arrows (w non-trivial).
bool contains_subpath(const Path& p, const Path& w);

// Every path of length <= max_len exactly once, in canonical order.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len);

bool is_acyclic(const Quiver& q);
std::optional<std::size_t> longest_path_length(const Quiver& q);

struct Degrees {
  std::size_t in = 0;
  std::size_t out = 0;
  bool operator==(const Degrees&) const = default;
};
Degrees degrees(const Quiver& q, VertexId v);

// "e_v" for trivial paths, "a*b*c" otherwise.
std::string format_path(const Quiver& q, const Path& p);

// Linear combination of parallel paths; zero coefficients are never stored.
class PathExpr {
 public:
  PathExpr() = default;
  PathExpr(const Path& p, const Scalar& coeff) { add(p, coeff); }

  // Throws ValidationError when p is not parallel to the existing terms.
  void add(const Path& p, const Scalar& coeff);

  const std::map<Path, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  // Source and target shared by all terms; nullopt for zero.
  std::optional<std::pair<VertexId, VertexId>> endpoints() const;
  std::size_t min_length() const;
  std::size_t max_length() const;

  bool operator==(const PathExpr&) const = default;

 private:
  std::map<Path, Scalar> terms_;
};

}  // namespace frobq
