// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace judge {

inline constexpr std::string_view kSkosNamespace = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kRdfNamespace =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kSkosPrefLabel =
    "http://www.w3.org/2004/02/skos/core#prefLabel";

struct Concept {
  std::string iri;
  std::map<std::string, std::string> pref_labels;  // language tag -> label
  std::optional<std::string> scheme_iri;
  std::vector<std::string> narrower;

  bool operator==(const Concept&) const = default;
};

/// SKOS concepts of one ontology, indexed by (language, lowercase label).
/// Immutable after construction.
class ConceptStore {
 public:
  using LabelIndex = std::map<std::pair<std::string, std::string>, std::vector<std::string>>;

  ConceptStore() = default;

  /// Parses the supported RDF/XML subset: skos:Concept with rdf:about,
  /// skos:prefLabel with xml:lang, skos:inScheme with rdf:resource and
  /// skos:narrower (nested concepts or rdf:resource). Everything else is
  /// skipped. Throws ParseError for malformed XML and LoadError for a
  /// concept with two labels in one language.
  static ConceptStore load(std::string_view document);
  static ConceptStore load_file(const std::filesystem::path& path);

  /// Builds a store from concepts directly. Same validation as load().
  static ConceptStore from_concepts(std::vector<Concept> concepts);

  static LabelIndex build_label_index(const std::map<std::string, Concept>& concepts);

  const Concept* find(std::string_view iri) const;

  /// Concept whose label in `lang` matches case-insensitively; smallest IRI
  /// wins when several do.
  const Concept* scan_for_term(std::string_view label, std::string_view lang) const;

  std::optional<std::string> pref_label(std::string_view iri, std::string_view lang) const;

  const std::map<std::string, Concept>& concepts() const noexcept { return concepts_; }
  const LabelIndex& label_index() const noexcept { return label_index_; }
  std::size_t size() const noexcept { return concepts_.size(); }
  bool empty() const noexcept { return concepts_.empty(); }

  bool operator==(const ConceptStore&) const = default;

 private:
  void add(Concept node);

  std::map<std::string, Concept> concepts_;
  LabelIndex label_index_;
};

/// RDF/XML rendering of a store in the same subset load() accepts.
std::string render_skos(const ConceptStore& store);

/// Ontologies by id. Loaded from a directory holding one `<id>.rdf` file per
/// ontology.
class OntologyRegistry {
 public:
  static OntologyRegistry load_directory(const std::filesystem::path& dir);

  void add(std::string id, ConceptStore store);
  const ConceptStore* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }
  std::vector<std::string> ids() const;
  std::size_t size() const noexcept { return stores_.size(); }

 private:
  std::map<std::string, ConceptStore, std::less<>> stores_;
};

}  // namespace judge
