// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/lexicon.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "judge/error.hpp"
#include "judge/text.hpp"

namespace judge {
namespace {

constexpr std::array<std::pair<PosTag, std::string_view>, 12> kPosNames{{
    {PosTag::noun, "noun"},
    {PosTag::verb, "verb"},
    {PosTag::adjective, "adjective"},
    {PosTag::adverb, "adverb"},
    {PosTag::pronoun, "pronoun"},
    {PosTag::preposition, "preposition"},
    {PosTag::article, "article"},
    {PosTag::conjunction, "conjunction"},
    {PosTag::numeral, "numeral"},
    {PosTag::interjection, "interjection"},
    {PosTag::punctuation, "punctuation"},
    {PosTag::unknown, "unknown"},
}};

}  // namespace

std::string_view to_string(PosTag tag) {
  for (const auto& [value, name] : kPosNames)
    if (value == tag) return name;
  return "unknown";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (const auto& [value, n] : kPosNames)
    if (n == name) return value;
  return std::nullopt;
}

Lexicon Lexicon::load(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    if (!text::is_valid_utf8(line)) throw LoadError("invalid UTF-8", line_no);

    auto fields = text::split(line, '\t');
    if (fields.size() < 2)
      throw LoadError("expected surface<TAB>pos[<TAB>alt...], got " +
                          std::to_string(fields.size()) + " field(s)",
                      line_no);

    LexiconEntry entry;
    entry.surface = text::to_lower(text::trim(fields[0]));
    if (entry.surface.empty()) throw LoadError("empty surface", line_no);

    auto primary = parse_pos_tag(text::trim(fields[1]));
    if (!primary || *primary == PosTag::unknown)
      throw LoadError("unknown part of speech '" + std::string(fields[1]) + "'",
                      line_no);
    entry.primary_pos = *primary;

    for (std::size_t i = 2; i < fields.size(); ++i) {
      auto alt = parse_pos_tag(text::trim(fields[i]));
      if (!alt || *alt == PosTag::unknown)
        throw LoadError("unknown part of speech '" + std::string(fields[i]) + "'",
                        line_no);
      if (*alt == entry.primary_pos ||
          std::find(entry.alternates.begin(), entry.alternates.end(), *alt) !=
              entry.alternates.end())
        throw LoadError("duplicate part of speech '" + std::string(fields[i]) + "'",
                        line_no);
      entry.alternates.push_back(*alt);
    }
    auto key = entry.surface;
    lexicon.entries_.insert_or_assign(std::move(key), std::move(entry));
  }
  return lexicon;
}

Lexicon Lexicon::parse(std::string_view document) {
  std::istringstream in{std::string(document)};
  return load(in);
}

Lexicon Lexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open lexicon " + path.string());
  return load(in);
}

PosTag Lexicon::pos_of(std::string_view surface) const {
  const auto* entry = find(surface);
  return entry ? entry->primary_pos : PosTag::unknown;
}

const LexiconEntry* Lexicon::find(std::string_view surface) const {
  auto it = entries_.find(text::to_lower(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace judge
