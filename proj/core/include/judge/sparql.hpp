// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "judge/skos.hpp"

// The SPARQL subset used to pull a concept's label in the target language:
//
//   query   := prefix* SELECT var WHERE? '{' triple '.'? filter? '.'? '}'
//   prefix  := PREFIX pname_ns IRIREF
//   triple  := (IRIREF | pname | var) pname var
//   filter  := FILTER '(' LANG '(' var ')' '=' STRING ')'
//
// Keywords are case-insensitive. One select variable, one triple pattern.
namespace judge::sparql {

struct Variable {
  std::string name;  // without the leading '?'
  bool operator==(const Variable&) const = default;
};

struct Iri {
  std::string value;
  bool operator==(const Iri&) const = default;
};

struct PrefixedName {
  std::string prefix;
  std::string local;
  bool operator==(const PrefixedName&) const = default;
};

using Subject = std::variant<Iri, Variable>;

struct TriplePattern {
  Subject subject;
  PrefixedName predicate;
  Variable object;
  bool operator==(const TriplePattern&) const = default;
};

struct LangFilter {
  Variable variable;
  std::string lang;  // trimmed, lowercase
  bool operator==(const LangFilter&) const = default;
};

struct QueryAst {
  std::map<std::string, std::string> prefixes;
  Variable select_var;
  TriplePattern pattern;
  std::optional<LangFilter> filter;

  std::string predicate_iri() const;
  bool operator==(const QueryAst&) const = default;
};

struct Literal {
  std::string text;
  std::optional<std::string> lang;
  bool operator==(const Literal&) const = default;
};

using Term = std::variant<Literal, Iri>;

struct BindingRow {
  std::map<std::string, Term> bindings;
  bool operator==(const BindingRow&) const = default;
};

/// Throws judge::ParseError with the byte offset of the offending token.
QueryAst parse_query(std::string_view text);

/// Canonical text; parse_query(render(ast)) == ast.
std::string render(const QueryAst& ast);

/// Matches the pattern against the (concept IRI, skos:prefLabel, label@lang)
/// triples of the store. Rows come out ordered by (subject IRI, language).
std::vector<BindingRow> evaluate(const ConceptStore& store, const QueryAst& ast);

/// `SELECT ?prefLabel WHERE { <iri> skos:prefLabel ?prefLabel .
///  FILTER (lang(?prefLabel) = "lang") }`
QueryAst label_query(std::string_view concept_iri, std::string_view lang);

}  // namespace judge::sparql
