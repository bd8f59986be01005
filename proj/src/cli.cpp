#include "frobq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "frobq/algebra.hpp"
#include "frobq/closed_forms.hpp"
#include "frobq/dsl.hpp"
#include "frobq/errors.hpp"
#include "frobq/families.hpp"
#include "frobq/frobenius.hpp"
#include "frobq/json_io.hpp"

namespace frobq::cli {

namespace {

struct Options {
  std::string file;
  std::string field;
  std::string coproduct;
  bool json = false;

  std::string family;
  std::vector<std::string> params;
  std::vector<std::string> rel;
  std::vector<std::string> mono;
  std::vector<std::string> lin;
  std::string lambda;
  bool no_loops = false;
  std::string output;
};

// Raised for a failed check that should end with exit code 4 after the
// report has been printed.
struct CheckFailed {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Field parse_field(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.size() > 1 && text.front() == 'F' &&
      std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
      text.size() <= 11) {
    return Field::prime(std::stoull(text.substr(1)));
  }
  throw ValidationError("field must be Q or F<prime>, got '" + text + "'");
}

QuiverDocument load(const Options& o) {
  QuiverDocument doc = parse_document(read_file(o.file));
  if (!o.field.empty()) doc.field = parse_field(o.field);
  return doc;
}

AlgebraBasis load_basis(const Options& o) {
  const QuiverDocument doc = load(o);
  return compute_basis(doc.quiver, doc.ideal, doc.field);
}

Json header(const std::string& command, const AlgebraBasis& a) {
  return {{"schema", kSchema}, {"command", command}, {"field", a.field().name()}};
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ValidationError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return std::stoul(text);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::size_t> parse_counts(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_count(part, what));
  return out;
}

std::vector<Scalar> parse_scalars(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& part : split(text, ',')) out.push_back(Field::rationals().parse(part));
  return out;
}

const std::string& param(const Options& o, std::size_t i, const std::string& what) {
  if (i >= o.params.size()) throw ValidationError("gen " + o.family + ": missing " + what);
  return o.params[i];
}

void expect_params(const Options& o, std::size_t n) {
  if (o.params.size() > n) {
    throw ValidationError("gen " + o.family + ": unexpected argument '" + o.params[n] + "'");
  }
}

BoundQuiver generate(const Options& o) {
  const std::string& f = o.family;
  if (f == "linear") {
    expect_params(o, 1);
    std::vector<SegmentRelation> rels;
    for (const auto& r : o.rel) {
      const auto parts = split(r, ':');
      if (parts.size() != 2) throw ValidationError("--rel expects START:LENGTH");
      rels.push_back({parse_count(parts[0], "start"), parse_count(parts[1], "length")});
    }
    return gen_linear(parse_count(param(o, 0, "N"), "N"), rels);
  }
  if (f == "cycle") {
    expect_params(o, 2);
    return gen_cycle(parse_count(param(o, 0, "N"), "N"), parse_count(param(o, 1, "D"), "D"));
  }
  if (f == "canonical") {
    expect_params(o, 1);
    CanonicalSpec spec{parse_counts(param(o, 0, "weights"), "weight"),
                       o.lambda.empty() ? std::vector<Scalar>{} : parse_scalars(o.lambda)};
    return gen_canonical(spec);
  }
  if (f == "toupie") {
    expect_params(o, 1);
    std::vector<BranchRelation> mono;
    for (const auto& r : o.mono) {
      const auto parts = split(r, ':');
      if (parts.size() != 3) throw ValidationError("--mono expects BRANCH:START:LENGTH");
      mono.push_back({parse_count(parts[0], "branch"), parse_count(parts[1], "start"),
                      parse_count(parts[2], "length")});
    }
    std::vector<std::vector<Scalar>> lin;
    for (const auto& r : o.lin) lin.push_back(parse_scalars(r));
    return gen_toupie(parse_counts(param(o, 0, "branch lengths"), "branch length"), mono, lin);
  }
  if (f == "diamond") {
    expect_params(o, 2);
    const std::size_t top = o.params.empty() ? 2 : parse_count(o.params[0], "length");
    const std::size_t bottom = o.params.size() < 2 ? top : parse_count(o.params[1], "length");
    return gen_diamond(top, bottom);
  }
  if (f == "gdiamond") {
    expect_params(o, 1);
    return gen_generalized_diamond(parse_counts(param(o, 0, "branch lengths"), "branch length"));
  }
  if (f == "rsz") {
    expect_params(o, 1);
    const QuiverDocument doc = parse_document(read_file(param(o, 0, "FILE")));
    return gen_radical_square_zero(doc.quiver);
  }
  if (f == "random") {
    expect_params(o, 4);
    RandomSpec spec;
    spec.seed = parse_count(param(o, 0, "SEED"), "seed");
    spec.max_vertices = parse_count(param(o, 1, "vertex bound"), "vertex bound");
    spec.max_arrows = parse_count(param(o, 2, "arrow bound"), "arrow bound");
    spec.regime = parse_regime(param(o, 3, "REGIME"));
    spec.allow_loops = !o.no_loops;
    return gen_random(spec);
  }
  if (f == "string-case") {
    expect_params(o, 1);
    return gen_string_case(static_cast<int>(parse_count(param(o, 0, "K"), "K")));
  }
  throw ValidationError("unknown family '" + f +
                        "' (linear, cycle, canonical, toupie, diamond, gdiamond, rsz, random, "
                        "string-case)");
}

void cmd_gen(const Options& o, std::ostream& out) {
  const BoundQuiver b = generate(o);
  const Field field = o.field.empty() ? Field::rationals() : parse_field(o.field);
  const std::string text = print_document(field, b.quiver, b.ideal);
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << text)) throw ValidationError("cannot write '" + o.output + "'");
}

void cmd_basis(const Options& o, std::ostream& out) {
  const AlgebraBasis a = load_basis(o);
  if (o.json) {
    Json j = header("basis", a);
    j["dimension"] = a.dimension();
    j["bound"] = a.bound();
    j["monomial"] = a.is_monomial();
    j["blocks"] = blocks_to_json(a);
    out << j.dump(2) << "\n";
    return;
  }
  const Quiver& q = a.quiver();
  out << "dimension " << a.dimension() << "\n";
  for (VertexId s = 0; s < q.vertex_count(); ++s) {
    for (VertexId t = 0; t < q.vertex_count(); ++t) {
      const auto block = a.block(s, t);
      if (block.empty()) continue;
      out << q.vertex_name(s) << " -> " << q.vertex_name(t) << ":";
      for (std::size_t i : block) out << " " << format_path(q, a.path(i));
      out << "\n";
    }
  }
}

void cmd_dim(const Options& o, std::ostream& out) {
  const AlgebraBasis a = load_basis(o);
  const std::size_t d = frobenius_dimension(a);
  if (o.json) {
    Json j = header("dim", a);
    j["algebra_dimension"] = a.dimension();
    j["frobenius_dimension"] = d;
    out << j.dump(2) << "\n";
    return;
  }
  out << d << "\n";
}

void print_candidate(const AlgebraBasis& a, const CoproductCandidate& c, std::ostream& out) {
  for (VertexId p = 0; p < c.vertex_count(); ++p) {
    out << "  Delta(e_" << a.quiver().vertex_name(p) << ") = " << format_tensor(a, c.at(p)) << "\n";
  }
}

void cmd_space(const Options& o, std::ostream& out) {
  const AlgebraBasis a = load_basis(o);
  const FrobeniusSpace space = solve_frobenius_space(a);
  if (o.json) {
    Json j = header("space", a);
    j["dimension"] = space.dimension;
    Json basis = Json::array();
    for (const auto& c : space.basis) basis.push_back({{"coproduct", coproduct_to_json(a, c)}});
    j["basis"] = std::move(basis);
    out << j.dump(2) << "\n";
    return;
  }
  out << "dimension " << space.dimension << "\n";
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    out << "candidate " << i + 1 << "\n";
    print_candidate(a, space.basis[i], out);
  }
}

std::string status_name(VerifyResult::Status s) {
  switch (s) {
    case VerifyResult::Status::kVerified: return "verified";
    case VerifyResult::Status::kSupportViolation: return "support_violation";
    case VerifyResult::Status::kNotBimoduleMap: return "not_bimodule_map";
  }
  return "?";
}

void cmd_verify(const Options& o, std::ostream& out) {
  const AlgebraBasis a = load_basis(o);
  Json doc;
  try {
    doc = Json::parse(read_file(o.coproduct));
  } catch (const Json::parse_error& e) {
    throw ValidationError("'" + o.coproduct + "' is not valid JSON: " + e.what());
  }
  const auto candidates = candidates_from_json(a, doc);
  Json results = Json::array();
  std::optional<std::string> failure;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const VerifyResult r = verify_coproduct(a, candidates[i]);
    Json item{{"index", i + 1}, {"status", status_name(r.status)}};
    if (!r.ok()) {
      if (r.x) {
        item["pair"] = {path_to_json(a.quiver(), a.path(*r.x)), path_to_json(a.quiver(), a.path(*r.y))};
        item["lhs"] = tensor_to_json(a, r.lhs);
        item["rhs"] = tensor_to_json(a, r.rhs);
      }
      item["message"] = r.message;
      if (!failure) failure = "candidate " + std::to_string(i + 1) + ": " + r.message;
    }
    results.push_back(std::move(item));
  }
  if (o.json) {
    Json j = header("verify", a);
    j["verified"] = !failure.has_value();
    j["candidates"] = std::move(results);
    out << j.dump(2) << "\n";
  } else if (failure) {
    out << "NOT VERIFIED\n" << *failure << "\n";
  } else {
    out << "VERIFIED\n";
  }
  if (failure) throw CheckFailed{};
}

void cmd_classify(const Options& o, std::ostream& out) {
  const AlgebraBasis a = load_basis(o);
  const std::size_t frobdim = frobenius_dimension(a);
  bool ok = true;
  Json j = header("classify", a);
  j["algebra_dimension"] = a.dimension();
  j["frobenius_dimension"] = frobdim;
  std::ostringstream text;
  text << "algebra dimension " << a.dimension() << "\n";
  text << "frobenius dimension " << frobdim << "\n";

  const bool rsz = is_radical_square_zero(a) && a.quiver().arrow_count() > 0;
  Json rj{{"applies", rsz}};
  if (rsz) {
    const std::size_t formula = radical_square_zero_dimension(a.quiver());
    bool has_length_two = false;
    for (ArrowId x = 0; x < a.quiver().arrow_count(); ++x) {
      if (!a.quiver().out_arrows(a.quiver().arrow(x).target).empty()) has_length_two = true;
    }
    rj["formula"] = formula;
    rj["formula_agrees"] = formula == frobdim;
    text << "radical square zero: quotient formula " << formula
         << (formula == frobdim ? " (agrees)" : " (DISAGREES)") << "\n";
    if (has_length_two) {
      rj["positive_claim_holds"] = frobdim > 0;
      text << "radical square zero with a path of length two: predicted >= 1: "
           << (frobdim > 0 ? "holds" : "FAILS") << "\n";
      ok = ok && frobdim > 0;
    }
  } else {
    text << "radical square zero: no\n";
  }
  j["radical_square_zero"] = std::move(rj);

  const bool string = is_string(a);
  Json sj{{"string", string}};
  if (string) {
    const bool quadratic = is_string_quadratic(a);
    const bool gentle = is_gentle(a);
    sj["quadratic"] = quadratic;
    sj["gentle"] = gentle;
    text << "string: yes" << (quadratic ? ", quadratic" : "") << (gentle ? ", gentle" : "");
    if (!gentle && !a.ideal().generators.empty()) {
      sj["positive_claim_holds"] = frobdim > 0;
      text << "; predicted >= 1: " << (frobdim > 0 ? "holds" : "FAILS");
      ok = ok && frobdim > 0;
    }
    text << "\n";
  } else {
    text << "string: no\n";
  }
  j["string"] = std::move(sj);

  Json tj{{"toupie", false}};
  if (toupie_shape(a.quiver())) {
    try {
      const ToupieClassification c = toupie_classify(a);
      const bool holds = c.holds_for(frobdim);
      tj = {{"toupie", true},
            {"kind", to_string(c.kind)},
            {"branches", c.shape.branches.size()},
            {"monomial_branches", c.monomial_count},
            {"independent_branches", c.independent_count},
            {"prediction", prediction_string(c)},
            {"holds", holds}};
      text << "toupie: " << to_string(c.kind) << " (branches " << c.shape.branches.size()
           << ", monomial branches " << c.monomial_count << ", independent branches "
           << c.independent_count << "); predicted " << prediction_string(c) << ": "
           << (holds ? "holds" : "FAILS") << "\n";
      ok = ok && holds;
    } catch (const ValidationError& e) {
      tj = {{"toupie", true}, {"error", e.what()}};
      text << "toupie: relations not supported by branches (" << e.what() << ")\n";
    }
  } else {
    text << "toupie: no\n";
  }
  j["toupie"] = std::move(tj);
  j["consistent"] = ok;

  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  if (!ok) throw CheckFailed{};
}

void cmd_patterns(const Options& o, std::ostream& out) {
  const AlgebraBasis a = load_basis(o);
  const Quiver& q = a.quiver();
  const auto matches = detect_local_patterns(a);
  bool ok = true;
  Json list = Json::array();
  std::ostringstream text;
  text << matches.size() << (matches.size() == 1 ? " match" : " matches") << "\n";
  auto names = [&](const std::vector<ArrowId>& xs) {
    Json arr = Json::array();
    for (ArrowId x : xs) arr.push_back(q.arrow(x).name);
    return arr;
  };
  for (const auto& m : matches) {
    Json item{{"pattern", m.pattern},
              {"vertex", q.vertex_name(m.vertex)},
              {"in", names(m.in_arrows)},
              {"out", names(m.out_arrows)}};
    Json zeros = Json::array();
    for (const auto& p : m.zero_products) zeros.push_back(path_to_json(q, p));
    item["zero_products"] = std::move(zeros);
    text << "pattern " << m.pattern << " at " << q.vertex_name(m.vertex) << ": witness Delta(e_"
         << q.vertex_name(m.vertex) << ") = " << q.arrow(m.left).name << " (x) "
         << q.arrow(m.right).name;
    try {
      const CoproductCandidate c = witness_coproduct(a, m);
      item["witness"] = {{"coproduct", coproduct_to_json(a, c)}};
      item["verified"] = true;
      text << ": VERIFIED\n";
    } catch (const VerificationError& e) {
      item["verified"] = false;
      item["message"] = e.what();
      text << ": FAILED (" << e.what() << ")\n";
      ok = false;
    }
    list.push_back(std::move(item));
  }
  if (o.json) {
    Json j = header("patterns", a);
    j["matches"] = std::move(list);
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  if (!ok) throw CheckFailed{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nearly Frobenius coproducts on bound quiver algebras", "frobq"};
  app.require_subcommand(1);

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Quiver document")->required();
    sub->add_option("--field", o.field, "Override the field: Q or F<prime>");
    sub->add_flag("--json", o.json, "Emit JSON");
  };
  CLI::App* basis = app.add_subcommand("basis", "Basis of the algebra per block");
  add_file(basis);
  CLI::App* dim = app.add_subcommand("dim", "Frobenius dimension");
  add_file(dim);
  CLI::App* space = app.add_subcommand("space", "Basis of the Frobenius space");
  add_file(space);
  CLI::App* verify = app.add_subcommand("verify", "Check coproduct candidates");
  add_file(verify);
  verify->add_option("--coproduct", o.coproduct, "Candidate JSON file")->required();
  CLI::App* classify = app.add_subcommand("classify", "Family classification and predictions");
  add_file(classify);
  CLI::App* patterns = app.add_subcommand("patterns", "Local patterns and witness coproducts");
  add_file(patterns);

  CLI::App* gen = app.add_subcommand("gen", "Emit a quiver document for a family");
  gen->add_option("family", o.family,
                  "linear N | cycle N D | canonical W1,W2,.. | toupie L1,L2,.. | diamond [L1 [L2]] "
                  "| gdiamond L1,L2,.. | rsz FILE | random SEED VB AB REGIME | string-case K")
      ->required();
  gen->add_option("params", o.params, "Family parameters");
  gen->add_option("--rel", o.rel, "linear: monomial relation START:LENGTH")->allow_extra_args(false);
  gen->add_option("--lambda", o.lambda, "canonical: lambda_3,..,lambda_t");
  gen->add_option("--mono", o.mono, "toupie: monomial relation BRANCH:START:LENGTH")
      ->allow_extra_args(false);
  gen->add_option("--lin", o.lin, "toupie: linear relation c1,..,ct over the branches")
      ->allow_extra_args(false);
  gen->add_flag("--no-loops", o.no_loops, "random: forbid loops");
  gen->add_option("--field", o.field, "Field line of the document: Q or F<prime>");
  gen->add_option("-o,--output", o.output, "Write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (basis->parsed()) cmd_basis(o, out);
    if (dim->parsed()) cmd_dim(o, out);
    if (space->parsed()) cmd_space(o, out);
    if (verify->parsed()) cmd_verify(o, out);
    if (classify->parsed()) cmd_classify(o, out);
    if (patterns->parsed()) cmd_patterns(o, out);
    if (gen->parsed()) cmd_gen(o, out);
  } catch (const CheckFailed&) {
    return kVerificationFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const UnsupportedRegime& e) {
    err << "unsupported ideal regime: " << e.what() << "\n";
    return kUnsupportedRegime;
  } catch (const InfiniteDimensional& e) {
    err << "infinite dimensional: " << e.what() << "\n";
    return kInfiniteDimensional;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const InternalFault& e) {
    err << "internal fault: " << e.what() << "\n";
    return kInternalFault;
  } catch (const std::exception& e) {
    err << "internal fault: " << e.what() << "\n";
    return kInternalFault;
  }
  return kOk;
}

}  // namespace frobq::cli
