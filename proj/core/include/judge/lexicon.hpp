// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace judge {

enum class PosTag {
  noun,
  verb,
  adjective,
  adverb,
  pronoun,
  preposition,
  article,
  conjunction,
  numeral,
  interjection,
  punctuation,
  unknown,
};

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

struct LexiconEntry {
  std::string surface;  // lowercase, accents preserved
  PosTag primary_pos = PosTag::unknown;
  std::vector<PosTag> alternates;

  bool operator==(const LexiconEntry&) const = default;
};

/// Anything that can assign a part of speech to a surface form. The shipped
/// implementation is the dictionary-backed Lexicon; an external tagger can be
/// plugged in behind the same interface.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual PosTag pos_of(std::string_view surface) const = 0;
};

/// Morphological dictionary. Immutable after load.
///
/// Document format: one entry per line, TAB-separated
/// `surface<TAB>primary_pos[<TAB>alt_pos...]`. Blank lines and lines starting
/// with '#' are skipped. Later duplicates of a surface replace earlier ones.
class Lexicon : public Tagger {
 public:
  Lexicon() = default;

  static Lexicon load(std::istream& in);
  static Lexicon parse(std::string_view document);
  static Lexicon load_file(const std::filesystem::path& path);

  /// Case-insensitive (lowercase-normalized), accent-sensitive lookup.
  /// Returns PosTag::unknown for absent words.
  PosTag pos_of(std::string_view surface) const override;

  const LexiconEntry* find(std::string_view surface) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<std::string, LexiconEntry, std::less<>>& entries() const noexcept {
    return entries_;
  }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<std::string, LexiconEntry, std::less<>> entries_;
};

}  // namespace judge
