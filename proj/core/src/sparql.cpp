// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/sparql.hpp"

#include <sstream>

#include "judge/error.hpp"
#include "judge/text.hpp"

namespace judge::sparql {
namespace {

enum class Kind {
  iri,      // <...>
  pname,    // prefix:local (local may be empty)
  var,      // ?name or $name
  string,   // "..." or '...'
  keyword,  // bare word, uppercased
  punct,    // { } ( ) . = ,
  star,
  end,
};

struct Tok {
  Kind kind;
  std::string text;
  std::size_t offset;
};

bool is_word_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Tok> run() {
    std::vector<Tok> out;
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) {
        out.push_back({Kind::end, "", pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  Tok next() {
    std::size_t start = pos_;
    char c = src_[pos_];
    switch (c) {
      case '{': case '}': case '(': case ')': case '.': case '=': case ',':
        ++pos_;
        return {Kind::punct, std::string(1, c), start};
      case '*':
        ++pos_;
        return {Kind::star, "*", start};
      case '<': {
        auto end = src_.find('>', pos_);
        if (end == std::string_view::npos) throw ParseError("unterminated IRI", start);
        auto body = src_.substr(pos_ + 1, end - pos_ - 1);
        for (char ch : body)
          if (ch == ' ' || ch == '\n' || ch == '\t' || ch == '<' || ch == '"')
            throw ParseError("invalid character in IRI", start);
        pos_ = end + 1;
        return {Kind::iri, std::string(body), start};
      }
      case '?': case '$': {
        ++pos_;
        std::size_t name_start = pos_;
        while (pos_ < src_.size() && is_word_char(src_[pos_]) && src_[pos_] != '-') ++pos_;
        if (pos_ == name_start) throw ParseError("empty variable name", start);
        return {Kind::var, std::string(src_.substr(name_start, pos_ - name_start)), start};
      }
      case '"': case '\'':
        return string_literal(c);
      default:
        break;
    }
    if (!is_word_char(c) && c != ':')
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    while (pos_ < src_.size() && is_word_char(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == ':') {
      ++pos_;
      // Local part: word characters, plus '.' when not the final character.
      while (pos_ < src_.size()) {
        char ch = src_[pos_];
        if (is_word_char(ch)) {
          ++pos_;
        } else if (ch == '.' && pos_ + 1 < src_.size() && is_word_char(src_[pos_ + 1])) {
          ++pos_;
        } else {
          break;
        }
      }
      return {Kind::pname, std::string(src_.substr(start, pos_ - start)), start};
    }
    return {Kind::keyword, text::to_upper(src_.substr(start, pos_ - start)), start};
  }

  Tok string_literal(char quote) {
    std::size_t start = pos_;
    ++pos_;
    std::string value;
    while (pos_ < src_.size() && src_[pos_] != quote) {
      char c = src_[pos_];
      if (c == '\n') throw ParseError("newline in string literal", start);
      if (c == '\\') {
        if (pos_ + 1 >= src_.size()) break;
        char e = src_[pos_ + 1];
        switch (e) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          default: throw ParseError("unknown escape in string literal", pos_);
        }
        pos_ += 2;
        continue;
      }
      value += c;
      ++pos_;
    }
    if (pos_ >= src_.size()) throw ParseError("unterminated string literal", start);
    ++pos_;
    return {Kind::string, std::move(value), start};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  QueryAst run() {
    QueryAst ast;
    while (is_keyword("PREFIX")) {
      advance();
      const auto& name = expect(Kind::pname, "prefix name");
      auto colon = name.text.find(':');
      if (colon + 1 != name.text.size())
        throw ParseError("prefix declaration must end with ':'", name.offset);
      auto prefix = name.text.substr(0, colon);
      const auto& iri = expect(Kind::iri, "namespace IRI");
      ast.prefixes[prefix] = iri.text;
    }

    if (!is_keyword("SELECT")) fail("expected SELECT");
    advance();
    if (peek().kind == Kind::star) fail("SELECT * is not supported; select one variable");
    if (is_keyword("DISTINCT") || is_keyword("REDUCED")) fail("solution modifiers are not supported");
    ast.select_var = Variable{expect(Kind::var, "select variable").text};
    if (peek().kind == Kind::var) fail("only one select variable is supported");

    if (is_keyword("WHERE")) advance();
    expect_punct("{");

    const auto& subject_tok = peek();
    switch (subject_tok.kind) {
      case Kind::iri:
        ast.pattern.subject = Iri{subject_tok.text};
        break;
      case Kind::var:
        ast.pattern.subject = Variable{subject_tok.text};
        break;
      case Kind::pname:
        ast.pattern.subject = Iri{expand(ast, subject_tok)};
        break;
      default:
        fail("expected triple subject");
    }
    advance();

    const auto& pred = peek();
    if (pred.kind != Kind::pname) fail("triple predicate must be a prefixed name");
    auto colon = pred.text.find(':');
    ast.pattern.predicate = {pred.text.substr(0, colon), pred.text.substr(colon + 1)};
    if (!ast.prefixes.count(ast.pattern.predicate.prefix))
      throw ParseError("undeclared prefix '" + ast.pattern.predicate.prefix + ":'", pred.offset);
    advance();

    const auto& obj = peek();
    if (obj.kind != Kind::var) fail("triple object must be a variable");
    ast.pattern.object = Variable{obj.text};
    advance();

    if (is_punct(".")) advance();

    if (is_keyword("FILTER")) {
      advance();
      ast.filter = filter();
      if (is_punct(".")) advance();
    }

    if (!is_punct("}")) {
      if (peek().kind == Kind::iri || peek().kind == Kind::var || peek().kind == Kind::pname)
        fail("only one triple pattern is supported");
      if (is_keyword("FILTER")) fail("only one FILTER is supported");
      fail("expected '}'");
    }
    advance();
    if (peek().kind != Kind::end) fail("unexpected content after query");

    validate(ast);
    return ast;
  }

 private:
  const Tok& peek() const { return toks_[pos_]; }
  void advance() {
    if (toks_[pos_].kind != Kind::end) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().offset);
  }

  bool is_keyword(std::string_view kw) const {
    return peek().kind == Kind::keyword && peek().text == kw;
  }
  bool is_punct(std::string_view p) const {
    return peek().kind == Kind::punct && peek().text == p;
  }

  const Tok& expect(Kind kind, std::string_view what) {
    if (peek().kind != kind) fail("expected " + std::string(what));
    const auto& t = peek();
    advance();
    return t;
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    advance();
  }

  std::string expand(const QueryAst& ast, const Tok& pname) const {
    auto colon = pname.text.find(':');
    auto prefix = pname.text.substr(0, colon);
    auto it = ast.prefixes.find(prefix);
    if (it == ast.prefixes.end())
      throw ParseError("undeclared prefix '" + prefix + ":'", pname.offset);
    return it->second + pname.text.substr(colon + 1);
  }

  LangFilter filter() {
    std::size_t start = peek().offset;
    try {
      expect_punct("(");
      if (!is_keyword("LANG")) fail("FILTER supports only lang(?var) = \"tag\"");
      advance();
      expect_punct("(");
      LangFilter f;
      f.variable = Variable{expect(Kind::var, "variable in lang()").text};
      expect_punct(")");
      expect_punct("=");
      f.lang = text::to_lower(text::trim(expect(Kind::string, "language tag string").text));
      expect_punct(")");
      return f;
    } catch (const ParseError& e) {
      throw ParseError("malformed FILTER: " + e.message(), e.offset() ? e.offset() : start);
    }
  }

  void validate(const QueryAst& ast) const {
    const auto* subject_var = std::get_if<Variable>(&ast.pattern.subject);
    auto in_pattern = [&](const Variable& v) {
      return v == ast.pattern.object || (subject_var && *subject_var == v);
    };
    if (ast.filter && !in_pattern(ast.filter->variable))
      throw ParseError("malformed FILTER: ?" + ast.filter->variable.name +
                           " does not occur in the triple pattern",
                       0);
    if (!in_pattern(ast.select_var) &&
        !(ast.filter && ast.filter->variable == ast.select_var))
      throw ParseError("select variable ?" + ast.select_var.name + " is not bound by the query",
                       0);
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

std::string escape_string(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string QueryAst::predicate_iri() const {
  auto it = prefixes.find(pattern.predicate.prefix);
  return it == prefixes.end() ? std::string() : it->second + pattern.predicate.local;
}

QueryAst parse_query(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string render(const QueryAst& ast) {
  std::ostringstream os;
  for (const auto& [prefix, iri] : ast.prefixes)
    os << "PREFIX " << prefix << ": <" << iri << ">\n";
  os << "SELECT ?" << ast.select_var.name << "\nWHERE { ";
  if (const auto* iri = std::get_if<Iri>(&ast.pattern.subject))
    os << '<' << iri->value << '>';
  else
    os << '?' << std::get<Variable>(ast.pattern.subject).name;
  os << ' ' << ast.pattern.predicate.prefix << ':' << ast.pattern.predicate.local << " ?"
     << ast.pattern.object.name << " .";
  if (ast.filter)
    os << " FILTER (lang(?" << ast.filter->variable.name << ") = \""
       << escape_string(ast.filter->lang) << "\")";
  os << " }\n";
  return os.str();
}

std::vector<BindingRow> evaluate(const ConceptStore& store, const QueryAst& ast) {
  std::vector<BindingRow> rows;
  if (ast.predicate_iri() != kSkosPrefLabel) return rows;

  const auto* subject_iri = std::get_if<Iri>(&ast.pattern.subject);
  const auto* subject_var = std::get_if<Variable>(&ast.pattern.subject);
  // A term cannot be both an IRI and a literal.
  if (subject_var && *subject_var == ast.pattern.object) return rows;

  for (const auto& [iri, node] : store.concepts()) {
    if (subject_iri && subject_iri->value != iri) continue;
    for (const auto& [lang, label] : node.pref_labels) {
      if (ast.filter) {
        // lang() of an IRI is an error, so a filter on the subject never holds.
        if (ast.filter->variable != ast.pattern.object) continue;
        if (ast.filter->lang != lang) continue;
      }
      BindingRow row;
      if (ast.select_var == ast.pattern.object)
        row.bindings.emplace(ast.select_var.name, Literal{label, lang});
      else
        row.bindings.emplace(ast.select_var.name, Iri{iri});
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

QueryAst label_query(std::string_view concept_iri, std::string_view lang) {
  QueryAst ast;
  ast.prefixes["skos"] = std::string(kSkosNamespace);
  ast.select_var = Variable{"prefLabel"};
  ast.pattern.subject = Iri{std::string(concept_iri)};
  ast.pattern.predicate = {"skos", "prefLabel"};
  ast.pattern.object = Variable{"prefLabel"};
  ast.filter = LangFilter{Variable{"prefLabel"}, text::to_lower(text::trim(lang))};
  return ast;
}

}  // namespace judge::sparql
