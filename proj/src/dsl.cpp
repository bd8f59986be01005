#include "frobq/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "frobq/errors.hpp"

namespace frobq {

namespace {

enum class Tok { kWord, kColon, kArrow, kStar, kPlus, kMinus, kSlash, kSemicolon, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation at;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '{' ||
         c == '}' || c == '.' || c == '\'';
}

bool is_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < text.size()) {
    const char c = text[i];
    const SourceLocation at{line, col};
    if (c == '\n') {
      out.push_back({Tok::kNewline, "\\n", at});
      ++i;
      ++line;
      col = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->", at});
      advance(2);
    } else if (is_ident_char(c)) {
      const std::size_t start = i;
      while (i < text.size() && is_ident_char(text[i])) advance(1);
      out.push_back({Tok::kWord, std::string(text.substr(start, i - start)), at});
    } else {
      Tok kind;
      switch (c) {
        case ':': kind = Tok::kColon; break;
        case '*': kind = Tok::kStar; break;
        case '+': kind = Tok::kPlus; break;
        case '-': kind = Tok::kMinus; break;
        case '/': kind = Tok::kSlash; break;
        case ';': kind = Tok::kSemicolon; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      out.push_back({kind, std::string(1, c), at});
      advance(1);
    }
  }
  out.push_back({Tok::kEnd, "end of input", {line, col}});
  return out;
}

struct RawArrow {
  ArrowSpec spec;
  SourceLocation at;
};

struct RawTerm {
  Scalar coeff;
  std::vector<Token> arrows;
};

struct RawRelation {
  std::vector<RawTerm> terms;
  SourceLocation at;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  void run() {
    while (true) {
      skip_newlines();
      const Token& t = peek();
      if (t.kind == Tok::kEnd) break;
      if (t.kind != Tok::kWord) fail("expected a statement keyword", t);
      if (t.text == "field") {
        parse_field();
      } else if (t.text == "vertex") {
        parse_vertex();
      } else if (t.text == "arrow") {
        parse_arrow();
      } else if (t.text == "relation") {
        parse_relation();
      } else {
        fail("unknown keyword '" + t.text + "'", t);
      }
    }
  }

  std::optional<Field> field;
  std::vector<std::string> vertices;
  std::vector<RawArrow> arrows;
  std::vector<RawRelation> relations;

 private:
  [[noreturn]] static void fail(const std::string& what, const Token& t) {
    throw ParseError(what + " (found '" + t.text + "')", t.at.line, t.at.column);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, peek());
    return next();
  }

  void skip_newlines() {
    while (peek().kind == Tok::kNewline) next();
  }

  void end_of_line() {
    if (peek().kind != Tok::kNewline && peek().kind != Tok::kEnd) fail("expected end of line", peek());
  }

  void parse_field() {
    const Token& kw = next();
    if (field) fail("duplicate field line", kw);
    const Token& name = expect(Tok::kWord, "Q or F");
    if (name.text == "Q") {
      field = Field::rationals();
    } else if (name.text == "F") {
      const Token& p = expect(Tok::kWord, "a prime");
      if (!is_digits(p.text) || p.text.size() > 10) fail("expected a prime", p);
      try {
        field = Field::prime(std::stoull(p.text));
      } catch (const ValidationError& e) {
        fail(e.what(), p);
      }
    } else {
      fail("expected Q or F", name);
    }
    end_of_line();
  }

  void parse_vertex() {
    next();
    if (peek().kind != Tok::kWord) fail("expected a vertex identifier", peek());
    while (peek().kind == Tok::kWord) vertices.push_back(next().text);
    end_of_line();
  }

  void parse_arrow() {
    const Token& kw = next();
    const Token& name = expect(Tok::kWord, "an arrow identifier");
    const char c0 = name.text.front();
    if (!std::isalpha(static_cast<unsigned char>(c0)) && c0 != '_') {
      fail("arrow identifiers start with a letter or '_'", name);
    }
    expect(Tok::kColon, "':'");
    const Token& s = expect(Tok::kWord, "a source vertex");
    expect(Tok::kArrow, "'->'");
    const Token& t = expect(Tok::kWord, "a target vertex");
    end_of_line();
    arrows.push_back({{name.text, s.text, t.text}, kw.at});
  }

  // [digits [/ digits]]
  std::optional<Scalar> parse_rational() {
    if (peek().kind != Tok::kWord || !is_digits(peek().text)) return std::nullopt;
    const Token& num = next();
    std::string text = num.text;
    if (peek().kind == Tok::kSlash) {
      next();
      const Token& den = expect(Tok::kWord, "a denominator");
      if (!is_digits(den.text)) fail("expected a denominator", den);
      text += "/" + den.text;
    }
    try {
      return Field::rationals().parse(text);
    } catch (const std::exception& e) {
      fail(e.what(), num);
    }
  }

  RawTerm parse_term(const Scalar& sign) {
    skip_newlines();
    RawTerm term{sign, {}};
    if (auto r = parse_rational()) {
      term.coeff = sign * *r;
      skip_newlines();
      if (peek().kind == Tok::kStar) next();
      skip_newlines();
    }
    while (true) {
      const Token& a = expect(Tok::kWord, "an arrow identifier");
      if (is_digits(a.text)) fail("expected an arrow identifier", a);
      term.arrows.push_back(a);
      skip_newlines();
      if (peek().kind != Tok::kStar) break;
      next();
      skip_newlines();
    }
    return term;
  }

  void parse_relation() {
    const Token& kw = next();
    RawRelation rel{{}, kw.at};
    skip_newlines();
    Scalar sign(1);
    if (peek().kind == Tok::kMinus || peek().kind == Tok::kPlus) {
      if (next().kind == Tok::kMinus) sign = Scalar(-1);
    }
    rel.terms.push_back(parse_term(sign));
    while (true) {
      skip_newlines();
      const Token& t = peek();
      if (t.kind == Tok::kSemicolon) {
        next();
        break;
      }
      if (t.kind != Tok::kPlus && t.kind != Tok::kMinus) fail("expected '+', '-' or ';'", t);
      next();
      rel.terms.push_back(parse_term(t.kind == Tok::kMinus ? Scalar(-1) : Scalar(1)));
    }
    end_of_line();
    relations.push_back(std::move(rel));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string at_line(const SourceLocation& at) { return "line " + std::to_string(at.line) + ": "; }

}  // namespace

QuiverDocument parse_document(std::string_view text) {
  Parser p(tokenize(text));
  p.run();

  std::vector<ArrowSpec> specs;
  for (const auto& a : p.arrows) specs.push_back(a.spec);
  std::optional<Quiver> q;
  try {
    q.emplace(p.vertices, std::move(specs));
  } catch (const ValidationError& e) {
    // Point at the arrow line when the message names that arrow.
    const std::string msg = e.what();
    for (const auto& a : p.arrows) {
      if (msg.find("arrow '" + a.spec.name + "'") != std::string::npos) {
        throw ValidationError(at_line(a.at) + msg);
      }
    }
    throw;
  }

  QuiverDocument doc{p.field.value_or(Field::rationals()), std::move(*q), {}, {}};
  for (const auto& rel : p.relations) {
    PathExpr g;
    for (const auto& term : rel.terms) {
      std::vector<ArrowId> ids;
      for (const auto& tok : term.arrows) {
        const auto id = doc.quiver.find_arrow(tok.text);
        if (!id) throw ParseError("unknown arrow '" + tok.text + "'", tok.at.line, tok.at.column);
        ids.push_back(*id);
      }
      try {
        g.add(make_path(doc.quiver, std::move(ids)), term.coeff);
      } catch (const ValidationError& e) {
        throw ValidationError(at_line(rel.at) + e.what());
      }
    }
    try {
      IdealSpec single{{g}};
      validate(doc.quiver, single);
    } catch (const ValidationError& e) {
      throw ValidationError(at_line(rel.at) + e.what());
    }
    doc.ideal.generators.push_back(std::move(g));
    doc.relation_locations.push_back(rel.at);
  }
  return doc;
}

std::string print_document(const Field& field, const Quiver& q, const IdealSpec& ideal) {
  std::ostringstream out;
  out << "field " << (field.is_rational() ? "Q" : "F " + std::to_string(field.modulus())) << "\n";
  out << "vertex";
  for (const auto& v : q.vertex_names()) out << " " << v;
  out << "\n";
  for (const auto& a : q.arrows()) {
    out << "arrow " << a.name << " : " << q.vertex_name(a.source) << " -> "
        << q.vertex_name(a.target) << "\n";
  }
  for (const auto& g : ideal.generators) {
    out << "relation ";
    bool first = true;
    for (const auto& [p, c] : g.terms()) {
      const bool negative = c.sign() < 0;
      const Scalar magnitude = negative ? -c : c;
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      if (!magnitude.is_one()) out << magnitude.str() << " ";
      out << format_path(q, p);
      first = false;
    }
    out << " ;\n";
  }
  return out.str();
}

std::string print_document(const QuiverDocument& doc) {
  return print_document(doc.field, doc.quiver, doc.ideal);
}

}  // namespace frobq
