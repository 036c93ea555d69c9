// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/morphology.hpp"

#include <algorithm>

#include "judge/error.hpp"
#include "judge/text.hpp"

namespace judge {

bool is_terminal_punct(char c) {
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ';':
    case ':':
      return true;
    default:
      return false;
  }
}

std::string TaggedSentence::render() const {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out += ' ';
    out += token.surface;
    out += token.trailing_punct;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  for (auto chunk : text::split_whitespace(input)) {
    std::size_t i = 0;
    while (i < chunk.size()) {
      std::size_t word_start = i;
      while (i < chunk.size() && !is_terminal_punct(chunk[i])) ++i;
      std::size_t punct_start = i;
      while (i < chunk.size() && is_terminal_punct(chunk[i])) ++i;
      auto word = chunk.substr(word_start, punct_start - word_start);
      auto punct = chunk.substr(punct_start, i - punct_start);
      if (!word.empty()) {
        Token token;
        token.surface = std::string(word);
        token.normalized = text::to_lower(word);
        token.index = tokens.size();
        token.trailing_punct = std::string(punct);
        tokens.push_back(std::move(token));
      } else if (!tokens.empty()) {
        tokens.back().trailing_punct += punct;
      }
    }
  }
  return tokens;
}

TaggedSentence tag(std::vector<Token> tokens, const Tagger& tagger) {
  TaggedSentence sentence;
  sentence.tokens = std::move(tokens);
  sentence.original = sentence.render();
  for (auto& token : sentence.tokens) token.pos = tagger.pos_of(token.normalized);
  return sentence;
}

TaggedSentence tag(std::vector<Token> tokens, const Tagger& tagger,
                   std::string original) {
  auto sentence = tag(std::move(tokens), tagger);
  sentence.original = std::move(original);
  return sentence;
}

TaggedSentence analyze(std::string_view input, const Tagger& tagger) {
  return apply_da_rule(tag(tokenize(input), tagger, std::string(input)));
}

TaggedSentence apply_da_rule(TaggedSentence sentence) {
  auto& tokens = sentence.tokens;
  auto verbs = std::count_if(tokens.begin(), tokens.end(), [](const Token& t) {
    return t.pos == PosTag::verb;
  });
  std::vector<std::size_t> retag;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].normalized != "da" || tokens[i].pos != PosTag::verb) continue;
    // Another verb present: "da" is the contraction de+a.
    if (verbs > 1) retag.push_back(i);
    // Otherwise it keeps the dictionary's verb tag, whether or not it
    // follows a noun.
  }
  for (auto i : retag) tokens[i].pos = PosTag::preposition;
  return sentence;
}

bool detect_locution(const TaggedSentence& sentence, std::size_t token_index) {
  const auto& tokens = sentence.tokens;
  if (token_index >= tokens.size())
    throw ContractViolation("detect_locution: token index " +
                            std::to_string(token_index) + " out of range (" +
                            std::to_string(tokens.size()) + " tokens)");
  return token_index + 2 < tokens.size() &&
         tokens[token_index + 1].pos == PosTag::preposition &&
         tokens[token_index + 2].pos == PosTag::noun;
}

std::vector<HomographCandidate> find_candidates(const TaggedSentence& sentence) {
  std::vector<HomographCandidate> out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const auto& token = sentence.tokens[i];
    if (token.pos != PosTag::noun && token.pos != PosTag::verb) continue;
    out.push_back({i, token.surface, detect_locution(sentence, i)});
  }
  return out;
}

}  // namespace judge
