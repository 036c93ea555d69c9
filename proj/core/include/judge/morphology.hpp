// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "judge/lexicon.hpp"

namespace judge {

struct Token {
  std::string surface;
  std::string normalized;  // lowercase(surface)
  PosTag pos = PosTag::unknown;
  std::size_t index = 0;
  std::string trailing_punct;

  bool operator==(const Token&) const = default;
};

struct TaggedSentence {
  std::string original;
  std::vector<Token> tokens;

  /// Surfaces plus trailing punctuation, joined by single spaces.
  std::string render() const;

  bool operator==(const TaggedSentence&) const = default;
};

struct HomographCandidate {
  std::size_t token_index = 0;
  std::string surface;
  bool in_locution = false;

  bool operator==(const HomographCandidate&) const = default;
};

/// True for the characters stripped into Token::trailing_punct.
bool is_terminal_punct(char c);

/// Whitespace split. Runs of . , ! ? ; : end a token and are kept as its
/// trailing punctuation; letters after such a run start a new token.
/// Punctuation with no preceding token is dropped.
std::vector<Token> tokenize(std::string_view text);

/// Looks every token up in the tagger. `original` defaults to the rendering
/// of the tokens.
TaggedSentence tag(std::vector<Token> tokens, const Tagger& tagger);
TaggedSentence tag(std::vector<Token> tokens, const Tagger& tagger,
                   std::string original);

/// tokenize + tag + apply_da_rule.
TaggedSentence analyze(std::string_view text, const Tagger& tagger);

/// Dictionaries tag "da" as a verb (from "dar"). A sentence holds a single
/// verb, so a verb-tagged "da" is retagged preposition whenever another
/// verb-tagged token is present. Decisions use the input tags, so the rule is
/// idempotent.
TaggedSentence apply_da_rule(TaggedSentence sentence);

/// Token at `token_index` is followed by preposition + noun. Throws
/// ContractViolation for an out-of-range index.
bool detect_locution(const TaggedSentence& sentence, std::size_t token_index);

/// Every noun or verb, in sentence order.
std::vector<HomographCandidate> find_candidates(const TaggedSentence& sentence);

}  // namespace judge
