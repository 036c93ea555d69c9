// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

// Minimal namespace-aware XML reader, enough for RDF/XML ontology files:
// elements, attributes, character data, comments, processing instructions,
// CDATA, DOCTYPE (skipped), predefined and numeric character references.
namespace judge::xml {

inline constexpr std::string_view kXmlNamespace =
    "http://www.w3.org/XML/1998/namespace";

struct Attribute {
  std::string ns;  // resolved namespace IRI; empty for unprefixed attributes
  std::string local;
  std::string value;
};

struct Element {
  std::string ns;
  std::string local;
  std::vector<Attribute> attributes;
  std::vector<std::unique_ptr<Element>> children;
  std::string text;  // concatenated character data directly inside
  std::size_t offset = 0;

  const Attribute* attribute(std::string_view ns_iri, std::string_view name) const;
};

/// Throws judge::ParseError (byte offset plus line:column in the message) on
/// malformed input or an unbound namespace prefix.
std::unique_ptr<Element> parse(std::string_view document);

}  // namespace judge::xml
