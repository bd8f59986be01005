#include "frobq/json_io.hpp"

#include <map>

#include "frobq/errors.hpp"

namespace frobq {

Json path_to_json(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return Json{{"e", q.vertex_name(p.source())}};
  Json arr = Json::array();
  for (ArrowId x : p.arrows()) arr.push_back(q.arrow(x).name);
  return arr;
}

Path path_from_json(const Quiver& q, const Json& j) {
  if (j.is_object()) {
    if (j.size() != 1 || !j.contains("e") || !j["e"].is_string()) {
      throw ValidationError("trivial path must be {\"e\": vertex}");
    }
    return trivial_path(q, j["e"].get<std::string>());
  }
  if (!j.is_array() || j.empty()) throw ValidationError("path must be a non-empty arrow list");
  std::vector<std::string> names;
  for (const auto& x : j) {
    if (!x.is_string()) throw ValidationError("arrow names must be strings");
    names.push_back(x.get<std::string>());
  }
  return make_path(q, names);
}

Json scalar_to_json(const Scalar& s) { return s.fraction(); }

Scalar scalar_from_json(const Field& f, const Json& j) {
  try {
    if (j.is_number_integer()) return f.from_int(j.get<long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
  } catch (const std::domain_error& e) {
    throw ValidationError(std::string("coefficient not defined in ") + f.name() + ": " + e.what());
  }
  throw ValidationError("coefficient must be a \"num/den\" string");
}

Json tensor_to_json(const AlgebraBasis& a, const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : t) {
    terms.push_back({{"left", path_to_json(a.quiver(), a.path(key.first))},
                     {"right", path_to_json(a.quiver(), a.path(key.second))},
                     {"coeff", scalar_to_json(coeff)}});
  }
  return terms;
}

Json coproduct_to_json(const AlgebraBasis& a, const CoproductCandidate& c) {
  Json out = Json::array();
  for (VertexId p = 0; p < c.vertex_count(); ++p) {
    out.push_back({{"vertex", a.quiver().vertex_name(p)}, {"terms", tensor_to_json(a, c.at(p))}});
  }
  return out;
}

namespace {

CoproductCandidate candidate_from_entries(const AlgebraBasis& a, const Json& entries) {
  if (!entries.is_array()) throw ValidationError("coproduct must be an array of vertex entries");
  const Quiver& q = a.quiver();
  CoproductCandidate c(q.vertex_count());
  std::vector<bool> seen(q.vertex_count(), false);
  for (const auto& entry : entries) {
    if (!entry.is_object() || !entry.contains("vertex") || !entry["vertex"].is_string()) {
      throw ValidationError("vertex entry needs a \"vertex\" string");
    }
    const VertexId p = q.vertex(entry["vertex"].get<std::string>());
    if (seen[p]) throw ValidationError("vertex '" + q.vertex_name(p) + "' listed twice");
    seen[p] = true;
    const Json terms = entry.value("terms", Json::array());
    if (!terms.is_array()) throw ValidationError("\"terms\" must be an array");
    for (const auto& term : terms) {
      if (!term.is_object() || !term.contains("left") || !term.contains("right") ||
          !term.contains("coeff")) {
        throw ValidationError("term needs \"left\", \"right\" and \"coeff\"");
      }
      const Scalar coeff = scalar_from_json(a.field(), term["coeff"]);
      const SparseVec left = a.reduce(path_from_json(q, term["left"]));
      const SparseVec right = a.reduce(path_from_json(q, term["right"]));
      for (const auto& [u, cu] : left) {
        for (const auto& [v, cv] : right) accumulate(c.at(p), {u, v}, coeff * cu * cv);
      }
    }
  }
  return c;
}

}  // namespace

std::vector<CoproductCandidate> candidates_from_json(const AlgebraBasis& a, const Json& j) {
  try {
    if (j.is_array()) return {candidate_from_entries(a, j)};
    if (!j.is_object()) throw ValidationError("expected a JSON object or array");
    if (j.contains("schema") && j["schema"] != kSchema) {
      throw ValidationError("unsupported schema " + j["schema"].dump());
    }
    if (j.contains("coproduct")) return {candidate_from_entries(a, j["coproduct"])};
    if (j.contains("basis") && j["basis"].is_array()) {
      std::vector<CoproductCandidate> out;
      for (const auto& item : j["basis"]) {
        if (!item.is_object() || !item.contains("coproduct")) {
          throw ValidationError("space basis entries need \"coproduct\"");
        }
        out.push_back(candidate_from_entries(a, item["coproduct"]));
      }
      return out;
    }
    throw ValidationError("no \"coproduct\" or \"basis\" key");
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed coproduct document: ") + e.what());
  }
}

Json blocks_to_json(const AlgebraBasis& a) {
  const Quiver& q = a.quiver();
  std::map<std::pair<VertexId, VertexId>, Json> blocks;
  for (const auto& p : a.paths()) {
    auto& b = blocks[{p.source(), p.target()}];
    if (b.is_null()) b = Json::array();
    b.push_back(path_to_json(q, p));
  }
  Json out = Json::array();
  for (const auto& [key, paths] : blocks) {
    out.push_back({{"source", q.vertex_name(key.first)},
                   {"target", q.vertex_name(key.second)},
                   {"dimension", paths.size()},
                   {"paths", paths}});
  }
  return out;
}

}  // namespace frobq
