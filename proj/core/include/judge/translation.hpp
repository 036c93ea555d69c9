// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judge/morphology.hpp"

namespace judge {

enum class ResolutionSource { temp_log, ontology };

std::string_view to_string(ResolutionSource source);
std::optional<ResolutionSource> parse_resolution_source(std::string_view name);

/// One pre-translation: a source-language token swapped for its
/// target-language meaning before the sentence reaches the MT backend.
struct Replacement {
  std::size_t token_index = 0;
  std::string original;
  std::string substituted;
  ResolutionSource source = ResolutionSource::ontology;

  bool operator==(const Replacement&) const = default;
};

struct ReplaceOutcome {
  TaggedSentence sentence;  // with the token swapped
  std::string text;         // sentence.render()
  Replacement replacement;
};

/// Swaps one token's surface. Every other token, the order and all trailing
/// punctuation are kept. Throws ContractViolation for a bad index or an empty
/// target.
ReplaceOutcome replace(const TaggedSentence& sentence, std::size_t token_index,
                       std::string_view target_word,
                       ResolutionSource source = ResolutionSource::ontology);

struct PhraseTarget {
  std::string phrase;
  std::uint64_t frequency = 0;

  bool operator==(const PhraseTarget&) const = default;
};

/// Source phrase (1-3 normalized tokens) -> targets, most frequent first,
/// ties broken by target text.
///
/// Document format: `source_phrase<TAB>target_phrase<TAB>frequency` lines;
/// '#' comments and blank lines are skipped; a repeated (source, target)
/// pair has its frequencies summed.
class PhraseTable {
 public:
  static constexpr std::size_t kMaxPhraseTokens = 3;

  static PhraseTable load(std::istream& in);
  static PhraseTable parse(std::string_view document);
  static PhraseTable load_file(const std::filesystem::path& path);

  void add(std::string_view source, std::string_view target, std::uint64_t frequency);

  const std::vector<PhraseTarget>* find(std::string_view source_phrase) const;
  /// Highest-frequency target, if the phrase is known.
  const PhraseTarget* best(std::string_view source_phrase) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<std::string, std::vector<PhraseTarget>, std::less<>>& entries() const noexcept {
    return entries_;
  }

  bool operator==(const PhraseTable&) const = default;

 private:
  std::map<std::string, std::vector<PhraseTarget>, std::less<>> entries_;
};

/// Greedy left-to-right longest match (3, 2, then 1 tokens) over normalized
/// tokens. A phrase never spans a token carrying trailing punctuation except
/// as its last token. Unknown tokens pass through; output is lowercase.
std::string mock_translate(const PhraseTable& table, std::string_view text,
                           std::string_view source_lang, std::string_view target_lang);

/// Machine-translation backend. Implementations must be total on valid UTF-8
/// and safe to call concurrently.
class MtBackend {
 public:
  virtual ~MtBackend() = default;
  virtual std::string name() const = 0;
  virtual std::string translate(std::string_view text, std::string_view source_lang,
                                std::string_view target_lang) const = 0;
};

/// Deterministic frequency-driven stand-in for a statistical MT engine.
class MockStatisticalMt final : public MtBackend {
 public:
  explicit MockStatisticalMt(PhraseTable table, std::string name = "mock-smt")
      : table_(std::move(table)), name_(std::move(name)) {}

  std::string name() const override { return name_; }
  std::string translate(std::string_view text, std::string_view source_lang,
                        std::string_view target_lang) const override {
    return mock_translate(table_, text, source_lang, target_lang);
  }

  const PhraseTable& table() const noexcept { return table_; }

 private:
  PhraseTable table_;
  std::string name_;
};

}  // namespace judge
