#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "frobq/algebra.hpp"
#include "frobq/frobenius.hpp"

namespace frobq {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "frobq/1";

// Arrow-name list, or {"e": vertex} for a trivial path.
Json path_to_json(const Quiver& q, const Path& p);
Path path_from_json(const Quiver& q, const Json& j);

// "num/den" strings; integers are accepted on input.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

// [{"left": path, "right": path, "coeff": "num/den"}, ...]
Json tensor_to_json(const AlgebraBasis& a, const TensorElement& t);

// [{"vertex": p, "terms": [...]}, ...] covering every vertex.
Json coproduct_to_json(const AlgebraBasis& a, const CoproductCandidate& c);

// Reads the candidates of a document: {"coproduct": [...]}, a bare array of
// vertex entries, or a space document {"basis": [{"coproduct": [...]}, ...]}.
// Term paths need not be basis paths; they are reduced. Missing vertices are
// zero. Throws ValidationError on malformed input.
std::vector<CoproductCandidate> candidates_from_json(const AlgebraBasis& a, const Json& j);

// Basis paths grouped by (source, target) block.
Json blocks_to_json(const AlgebraBasis& a);

}  // namespace frobq
