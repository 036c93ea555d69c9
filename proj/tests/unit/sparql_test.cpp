// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/sparql.hpp"

#include <gtest/gtest.h>

#include <random>

#include "judge/error.hpp"
#include "judge/skos.hpp"
#include "support.hpp"

namespace judge::sparql {
namespace {

constexpr const char* kDrums = "http://purl.org/ontology/mo/mit#Drums";

ConceptStore drums_store() {
  return ConceptStore::load_file(testing::data_path("fixtures/drums_excerpt_pt.rdf"));
}

const Literal& literal(const BindingRow& row, const std::string& var) {
  return std::get<Literal>(row.bindings.at(var));
}

TEST(Sparql, VerbatimLabelQuery) {
  auto ast = parse_query(testing::read_file(testing::data_path("fixtures/drums_label_query.rq")));
  EXPECT_EQ(ast.select_var.name, "prefLabel");
  EXPECT_EQ(std::get<Iri>(ast.pattern.subject).value, kDrums);
  EXPECT_EQ(ast.predicate_iri(), std::string(kSkosPrefLabel));
  ASSERT_TRUE(ast.filter);
  EXPECT_EQ(ast.filter->lang, "en");  // "en " with the stray space trimmed
  auto rows = evaluate(drums_store(), ast);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(literal(rows[0], "prefLabel").text, "Drums");
  EXPECT_EQ(literal(rows[0], "prefLabel").lang, "en");
}

TEST(Sparql, PortugueseFilter) {
  auto rows = evaluate(drums_store(), label_query(kDrums, "pt"));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(literal(rows[0], "prefLabel").text, "Bateria");
}

TEST(Sparql, NoFilterReturnsEveryLanguage) {
  auto rows = evaluate(drums_store(), parse_query(
      "PREFIX skos: <http://www.w3.org/2004/02/skos/core#> "
      "SELECT ?l WHERE { <http://purl.org/ontology/mo/mit#Drums> skos:prefLabel ?l }"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(literal(rows[0], "l").lang, "en");
  EXPECT_EQ(literal(rows[1], "l").lang, "pt");
}

TEST(Sparql, VariableSubject) {
  auto store = ConceptStore::load_file(testing::data_path("ontologies/music_ontology.rdf"));
  auto rows = evaluate(store, parse_query(
      "PREFIX skos: <http://www.w3.org/2004/02/skos/core#> SELECT ?s "
      "WHERE { ?s skos:prefLabel ?l . FILTER(lang(?l) = \"pt\") }"));
  std::size_t with_pt = 0;
  for (const auto& [iri, c] : store.concepts()) with_pt += c.pref_labels.count("pt");
  ASSERT_EQ(rows.size(), with_pt);
  EXPECT_EQ(rows[0].bindings.size(), 1u);  // only the select variable is projected
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_LT(std::get<Iri>(rows[i - 1].bindings.at("s")).value,
              std::get<Iri>(rows[i].bindings.at("s")).value);
}

TEST(Sparql, OtherPredicatesMatchNothing) {
  auto rows = evaluate(drums_store(), parse_query(
      "PREFIX skos: <http://www.w3.org/2004/02/skos/core#> "
      "SELECT ?l WHERE { <http://purl.org/ontology/mo/mit#Drums> skos:altLabel ?l }"));
  EXPECT_TRUE(rows.empty());
}

TEST(Sparql, UnknownSubject) {
  EXPECT_TRUE(evaluate(drums_store(), label_query("urn:nope", "en")).empty());
}

TEST(Sparql, KeywordsCaseInsensitiveAndComments) {
  auto ast = parse_query("# lookup\nprefix skos: <http://www.w3.org/2004/02/skos/core#>\n"
                         "select ?x where { skos:Drums skos:prefLabel ?x . "
                         "filter (LANG(?x) = 'EN') . }");
  EXPECT_EQ(std::get<Iri>(ast.pattern.subject).value,
            "http://www.w3.org/2004/02/skos/core#Drums");
  EXPECT_EQ(ast.filter->lang, "en");
}

std::size_t error_offset(const std::string& q) {
  try {
    parse_query(q);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for: " << q;
  return 0;
}

TEST(SparqlErrors, UndeclaredPrefix) {
  std::string q = "SELECT ?l WHERE { <urn:x> skos:prefLabel ?l }";
  EXPECT_EQ(error_offset(q), q.find("skos:"));
}

TEST(SparqlErrors, UnsupportedForms) {
  const std::string p = "PREFIX s: <urn:s#> ";
  EXPECT_THROW(parse_query(p + "SELECT * WHERE { <urn:x> s:p ?l }"), ParseError);
  EXPECT_THROW(parse_query(p + "SELECT DISTINCT ?l WHERE { <urn:x> s:p ?l }"), ParseError);
  EXPECT_THROW(parse_query(p + "SELECT ?l ?m WHERE { <urn:x> s:p ?l }"), ParseError);
  EXPECT_THROW(parse_query(p + "SELECT ?l WHERE { <urn:x> s:p ?l . <urn:y> s:p ?l }"),
               ParseError);
  EXPECT_THROW(parse_query(p + "SELECT ?l WHERE { <urn:x> <urn:p> ?l }"), ParseError);
  EXPECT_THROW(parse_query(p + "SELECT ?l WHERE { <urn:x> s:p \"lit\" }"), ParseError);
  EXPECT_THROW(parse_query(p + "SELECT ?l WHERE { <urn:x> s:p ?l FILTER(lang(?l) = \"en\") "
                               "FILTER(lang(?l) = \"pt\") }"),
               ParseError);
}

TEST(SparqlErrors, MalformedFilter) {
  const std::string p = "PREFIX s: <urn:s#> SELECT ?l WHERE { <urn:x> s:p ?l ";
  try {
    parse_query(p + "FILTER(str(?l) = \"en\") }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(e.message().find("malformed FILTER"), std::string::npos);
  }
  EXPECT_THROW(parse_query(p + "FILTER(lang(?l) = \"en\" }"), ParseError);
}

TEST(SparqlErrors, UnboundVariables) {
  const std::string p = "PREFIX s: <urn:s#> ";
  EXPECT_THROW(parse_query(p + "SELECT ?z WHERE { <urn:x> s:p ?l }"), ParseError);
  EXPECT_THROW(parse_query(p + "SELECT ?l WHERE { <urn:x> s:p ?l FILTER(lang(?q) = \"en\") }"),
               ParseError);
}

TEST(SparqlErrors, Truncated) {
  EXPECT_THROW(parse_query(""), ParseError);
  EXPECT_THROW(parse_query("PREFIX s: <urn:s#> SELECT ?l WHERE { <urn:x> s:p ?l"), ParseError);
  EXPECT_THROW(parse_query("SELECT ?l WHERE { <urn:x"), ParseError);
  EXPECT_THROW(parse_query("PREFIX s: <urn:s#> SELECT ?l WHERE { <urn:x> s:p ?l } junk"),
               ParseError);
}

TEST(Sparql, RenderIsCanonical) {
  auto ast = label_query(kDrums, "en");
  EXPECT_EQ(render(ast),
            "PREFIX skos: <http://www.w3.org/2004/02/skos/core#>\n"
            "SELECT ?prefLabel\n"
            "WHERE { <http://purl.org/ontology/mo/mit#Drums> skos:prefLabel ?prefLabel . "
            "FILTER (lang(?prefLabel) = \"en\") }\n");
}

// Randomized equivalence with the store's direct lookup.

ConceptStore random_store(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(0, 10), coin(0, 1);
  const std::vector<std::string> tags{"en", "pt", "es"};
  std::vector<Concept> concepts;
  for (int k = 0, m = n(rng); k < m; ++k) {
    Concept c{"http://example.org/c#" + std::to_string(k), {}, std::nullopt, {}};
    for (const auto& t : tags)
      if (coin(rng)) c.pref_labels[t] = "L" + std::to_string(k) + t;
    concepts.push_back(std::move(c));
  }
  return ConceptStore::from_concepts(std::move(concepts));
}

TEST(SparqlProperty, LabelQueryAgreesWithPrefLabel) {
  std::mt19937 rng(31);
  const std::vector<std::string> tags{"en", "pt", "es", "de"};
  for (int i = 0; i < 300; ++i) {
    auto store = random_store(rng);
    for (int k = 0; k < 12; ++k) {
      auto iri = "http://example.org/c#" + std::to_string(k);
      for (const auto& t : tags) {
        auto rows = evaluate(store, label_query(iri, t));
        auto expected = store.pref_label(iri, t);
        if (!expected) {
          EXPECT_TRUE(rows.empty());
          continue;
        }
        ASSERT_EQ(rows.size(), 1u);
        EXPECT_EQ(literal(rows[0], "prefLabel").text, *expected);
        EXPECT_EQ(literal(rows[0], "prefLabel").lang, t);
      }
    }
  }
}

TEST(SparqlProperty, RenderParseRoundTrip) {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 300; ++i) {
    QueryAst ast;
    ast.prefixes["skos"] = std::string(kSkosNamespace);
    if (coin(rng)) ast.prefixes["ex"] = "http://example.org/x#";
    ast.pattern.predicate = {"skos", "prefLabel"};
    ast.pattern.object = {"o" + std::to_string(i)};
    if (coin(rng)) {
      ast.pattern.subject = Iri{"http://example.org/c#" + std::to_string(i)};
      ast.select_var = ast.pattern.object;
    } else {
      ast.pattern.subject = Variable{"s"};
      ast.select_var = coin(rng) ? Variable{"s"} : ast.pattern.object;
    }
    if (coin(rng)) ast.filter = LangFilter{ast.pattern.object, coin(rng) ? "en" : "pt"};
    EXPECT_EQ(parse_query(render(ast)), ast) << render(ast);
  }
}

}  // namespace
}  // namespace judge::sparql
