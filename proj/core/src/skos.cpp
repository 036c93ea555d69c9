// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/skos.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "judge/error.hpp"
#include "judge/text.hpp"
#include "xml.hpp"

namespace judge {
namespace {

// Primary subtag, lowercased. "en-GB" -> "en"; "" when not a two-letter code.
std::string normalize_lang(std::string_view raw) {
  auto tag = text::to_lower(text::trim(raw));
  auto dash = tag.find('-');
  if (dash != std::string::npos) tag.resize(dash);
  return text::is_language_tag(tag) ? tag : std::string();
}

bool is_absolute_iri(std::string_view iri) {
  auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    char c = iri[i];
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (i > 0 && ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.'));
    if (!ok) return false;
  }
  return true;
}

void merge_into(std::map<std::string, Concept>& concepts, Concept incoming) {
  auto [it, inserted] = concepts.try_emplace(incoming.iri, incoming);
  if (inserted) return;
  auto& existing = it->second;
  for (auto& [lang, label] : incoming.pref_labels) {
    if (existing.pref_labels.count(lang))
      throw LoadError("concept <" + existing.iri + "> has more than one prefLabel for '" +
                      lang + "'");
    existing.pref_labels.emplace(lang, std::move(label));
  }
  if (incoming.scheme_iri && !existing.scheme_iri) existing.scheme_iri = incoming.scheme_iri;
  for (auto& n : incoming.narrower)
    if (std::find(existing.narrower.begin(), existing.narrower.end(), n) ==
        existing.narrower.end())
      existing.narrower.push_back(std::move(n));
}

class SkosReader {
 public:
  std::map<std::string, Concept> run(const xml::Element& root) {
    walk(root, "", nullptr);
    return std::move(concepts_);
  }

 private:
  static bool is_skos(const xml::Element& el, std::string_view local) {
    return el.ns == kSkosNamespace && el.local == local;
  }

  static std::string inherited_lang(const xml::Element& el, const std::string& parent) {
    if (const auto* a = el.attribute(xml::kXmlNamespace, "lang")) return a->value;
    return parent;
  }

  // `parent` is the concept whose skos:narrower we are inside, if any.
  void walk(const xml::Element& el, const std::string& lang, Concept* parent) {
    auto scope_lang = inherited_lang(el, lang);
    if (is_skos(el, "Concept")) {
      read_concept(el, scope_lang, parent);
      return;
    }
    for (const auto& child : el.children) walk(*child, scope_lang, nullptr);
  }

  void read_concept(const xml::Element& el, const std::string& lang, Concept* parent) {
    const auto* about = el.attribute(kRdfNamespace, "about");
    if (!about || text::trim(about->value).empty())
      throw LoadError("skos:Concept without rdf:about at offset " +
                      std::to_string(el.offset));
    Concept node;
    node.iri = std::string(text::trim(about->value));
    if (!is_absolute_iri(node.iri))
      throw LoadError("concept IRI <" + node.iri + "> is not absolute");
    if (parent) parent->narrower.push_back(node.iri);

    for (const auto& child_ptr : el.children) {
      const auto& child = *child_ptr;
      auto child_lang = inherited_lang(child, lang);
      if (is_skos(child, "prefLabel")) {
        auto tag = normalize_lang(child_lang);
        if (tag.empty()) continue;  // untagged or non-ISO-639-1 literal
        auto label = std::string(text::trim(child.text));
        if (label.empty()) continue;
        if (!node.pref_labels.emplace(tag, std::move(label)).second)
          throw LoadError("concept <" + node.iri + "> has more than one prefLabel for '" +
                          tag + "'");
      } else if (is_skos(child, "inScheme")) {
        if (const auto* r = child.attribute(kRdfNamespace, "resource"))
          node.scheme_iri = r->value;
      } else if (is_skos(child, "narrower")) {
        if (const auto* r = child.attribute(kRdfNamespace, "resource"))
          node.narrower.push_back(r->value);
        for (const auto& nested : child.children) walk(*nested, child_lang, &node);
      } else {
        for (const auto& nested : child.children) walk(*nested, child_lang, nullptr);
      }
    }
    merge_into(concepts_, std::move(node));
  }

  std::map<std::string, Concept> concepts_;
};

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

ConceptStore ConceptStore::load(std::string_view document) {
  auto root = xml::parse(document);
  return from_concepts([&] {
    auto map = SkosReader().run(*root);
    std::vector<Concept> out;
    for (auto& [iri, c] : map) out.push_back(std::move(c));
    return out;
  }());
}

ConceptStore ConceptStore::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open ontology " + path.string());
  std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load(doc);
}

ConceptStore ConceptStore::from_concepts(std::vector<Concept> concepts) {
  ConceptStore store;
  for (auto& c : concepts) store.add(std::move(c));
  store.label_index_ = build_label_index(store.concepts_);
  return store;
}

void ConceptStore::add(Concept node) {
  if (node.iri.empty()) throw LoadError("concept with empty IRI");
  for (const auto& [lang, label] : node.pref_labels) {
    if (!text::is_language_tag(lang))
      throw LoadError("concept <" + node.iri + "> has invalid language tag '" + lang + "'");
    if (label.empty())
      throw LoadError("concept <" + node.iri + "> has an empty label for '" + lang + "'");
  }
  merge_into(concepts_, std::move(node));
}

ConceptStore::LabelIndex ConceptStore::build_label_index(
    const std::map<std::string, Concept>& concepts) {
  LabelIndex index;
  // Map iteration is IRI-ordered, so every IRI list comes out sorted.
  for (const auto& [iri, c] : concepts)
    for (const auto& [lang, label] : c.pref_labels)
      index[{lang, text::to_lower(label)}].push_back(iri);
  return index;
}

const Concept* ConceptStore::find(std::string_view iri) const {
  auto it = concepts_.find(std::string(iri));
  return it == concepts_.end() ? nullptr : &it->second;
}

const Concept* ConceptStore::scan_for_term(std::string_view label,
                                           std::string_view lang) const {
  auto it = label_index_.find({std::string(lang), text::to_lower(text::trim(label))});
  if (it == label_index_.end() || it->second.empty()) return nullptr;
  return find(it->second.front());
}

std::optional<std::string> ConceptStore::pref_label(std::string_view iri,
                                                    std::string_view lang) const {
  const auto* c = find(iri);
  if (!c) return std::nullopt;
  auto it = c->pref_labels.find(std::string(lang));
  if (it == c->pref_labels.end()) return std::nullopt;
  return it->second;
}

std::string render_skos(const ConceptStore& store) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<rdf:RDF xmlns:rdf=\"" << kRdfNamespace << "\"\n"
     << "         xmlns:skos=\"" << kSkosNamespace << "\">\n";
  for (const auto& [iri, c] : store.concepts()) {
    os << "  <skos:Concept rdf:about=\"" << escape_xml(iri) << "\">\n";
    for (const auto& [lang, label] : c.pref_labels)
      os << "    <skos:prefLabel xml:lang=\"" << lang << "\">" << escape_xml(label)
         << "</skos:prefLabel>\n";
    if (c.scheme_iri)
      os << "    <skos:inScheme rdf:resource=\"" << escape_xml(*c.scheme_iri) << "\"/>\n";
    for (const auto& n : c.narrower)
      os << "    <skos:narrower rdf:resource=\"" << escape_xml(n) << "\"/>\n";
    os << "  </skos:Concept>\n";
  }
  os << "</rdf:RDF>\n";
  return os.str();
}

OntologyRegistry OntologyRegistry::load_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec))
    throw LoadError("ontology directory " + dir.string() + " does not exist");
  OntologyRegistry registry;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".rdf") continue;
    try {
      registry.add(entry.path().stem().string(), ConceptStore::load_file(entry.path()));
    } catch (const ParseError& e) {
      throw LoadError(entry.path().filename().string() + ": " + e.what());
    } catch (const LoadError& e) {
      throw LoadError(entry.path().filename().string() + ": " + e.what());
    }
  }
  return registry;
}

void OntologyRegistry::add(std::string id, ConceptStore store) {
  stores_.insert_or_assign(std::move(id), std::move(store));
}

const ConceptStore* OntologyRegistry::find(std::string_view id) const {
  auto it = stores_.find(id);
  return it == stores_.end() ? nullptr : &it->second;
}

std::vector<std::string> OntologyRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, store] : stores_) out.push_back(id);
  return out;
}

}  // namespace judge
