// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/translation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "judge/error.hpp"
#include "judge/text.hpp"

namespace judge {
namespace {

std::string normalize_phrase(std::string_view phrase) {
  std::vector<std::string> parts;
  for (auto p : text::split_whitespace(phrase)) parts.push_back(text::to_lower(p));
  return text::join(parts, " ");
}

}  // namespace

std::string_view to_string(ResolutionSource source) {
  return source == ResolutionSource::temp_log ? "temp_log" : "ontology";
}

std::optional<ResolutionSource> parse_resolution_source(std::string_view name) {
  if (name == "temp_log") return ResolutionSource::temp_log;
  if (name == "ontology") return ResolutionSource::ontology;
  return std::nullopt;
}

ReplaceOutcome replace(const TaggedSentence& sentence, std::size_t token_index,
                       std::string_view target_word, ResolutionSource source) {
  if (token_index >= sentence.tokens.size())
    throw ContractViolation("replace: token index " + std::to_string(token_index) +
                            " out of range (" + std::to_string(sentence.tokens.size()) +
                            " tokens)");
  if (text::trim(target_word).empty()) throw ContractViolation("replace: empty target word");

  ReplaceOutcome out{sentence, {}, {}};
  auto& token = out.sentence.tokens[token_index];
  out.replacement = {token_index, token.surface, std::string(target_word), source};
  token.surface = std::string(target_word);
  token.normalized = text::to_lower(target_word);
  out.text = out.sentence.render();
  return out;
}

PhraseTable PhraseTable::load(std::istream& in) {
  PhraseTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    if (!text::is_valid_utf8(line)) throw LoadError("invalid UTF-8", line_no);
    auto fields = text::split(line, '\t');
    if (fields.size() != 3)
      throw LoadError("expected source<TAB>target<TAB>frequency, got " +
                          std::to_string(fields.size()) + " field(s)",
                      line_no);
    auto source = normalize_phrase(fields[0]);
    auto target = std::string(text::trim(fields[1]));
    if (source.empty() || target.empty()) throw LoadError("empty phrase", line_no);
    if (text::split_whitespace(source).size() > kMaxPhraseTokens)
      throw LoadError("source phrase longer than " + std::to_string(kMaxPhraseTokens) +
                          " tokens",
                      line_no);
    auto raw = text::trim(fields[2]);
    long long freq = 0;
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), freq);
    if (ec != std::errc{} || ptr != raw.data() + raw.size())
      throw LoadError("bad frequency '" + std::string(raw) + "'", line_no);
    if (freq <= 0) throw LoadError("frequency must be positive", line_no);
    table.add(source, target, static_cast<std::uint64_t>(freq));
  }
  return table;
}

PhraseTable PhraseTable::parse(std::string_view document) {
  std::istringstream in{std::string(document)};
  return load(in);
}

PhraseTable PhraseTable::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open phrase table " + path.string());
  return load(in);
}

void PhraseTable::add(std::string_view source, std::string_view target,
                      std::uint64_t frequency) {
  auto key = normalize_phrase(source);
  auto& targets = entries_[key];
  auto it = std::find_if(targets.begin(), targets.end(),
                         [&](const PhraseTarget& t) { return t.phrase == target; });
  if (it != targets.end())
    it->frequency += frequency;
  else
    targets.push_back({std::string(target), frequency});
  std::sort(targets.begin(), targets.end(), [](const PhraseTarget& a, const PhraseTarget& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.phrase < b.phrase;
  });
}

const std::vector<PhraseTarget>* PhraseTable::find(std::string_view source_phrase) const {
  auto it = entries_.find(normalize_phrase(source_phrase));
  return it == entries_.end() ? nullptr : &it->second;
}

const PhraseTarget* PhraseTable::best(std::string_view source_phrase) const {
  const auto* targets = find(source_phrase);
  return targets && !targets->empty() ? &targets->front() : nullptr;
}

std::string mock_translate(const PhraseTable& table, std::string_view input,
                           std::string_view /*source_lang*/,
                           std::string_view /*target_lang*/) {
  auto tokens = tokenize(input);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    const PhraseTarget* target = nullptr;
    for (std::size_t n = PhraseTable::kMaxPhraseTokens; n >= 1; --n) {
      if (i + n > tokens.size()) continue;
      bool crosses_punct = false;
      std::string phrase;
      for (std::size_t k = 0; k < n; ++k) {
        if (k + 1 < n && !tokens[i + k].trailing_punct.empty()) crosses_punct = true;
        if (k > 0) phrase += ' ';
        phrase += tokens[i + k].normalized;
      }
      if (crosses_punct) continue;
      if ((target = table.best(phrase))) {
        matched = n;
        break;
      }
    }
    if (target) {
      out.push_back(text::to_lower(target->phrase) + tokens[i + matched - 1].trailing_punct);
      i += matched;
    } else {
      out.push_back(tokens[i].normalized + tokens[i].trailing_punct);
      ++i;
    }
  }
  return text::join(out, " ");
}

}  // namespace judge
