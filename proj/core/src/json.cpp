// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/json.hpp"

#include <stdexcept>

namespace judge {
namespace {

using nlohmann::json;

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
void read_optional(const json& j, const char* key, std::optional<T>& out) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null())
    out.reset();
  else
    out = it->template get<T>();
}

template <typename T, typename Parse>
void read_enum(const json& j, T& out, Parse parse, const char* what) {
  auto name = j.get<std::string>();
  auto v = parse(name);
  if (!v) throw json::other_error::create(501, std::string("unknown ") + what + " '" + name + "'", &j);
  out = *v;
}

}  // namespace

void to_json(json& j, PosTag v) { j = std::string(to_string(v)); }
void from_json(const json& j, PosTag& v) { read_enum(j, v, parse_pos_tag, "part of speech"); }

void to_json(json& j, SkipReason v) { j = std::string(to_string(v)); }
void from_json(const json& j, SkipReason& v) { read_enum(j, v, parse_skip_reason, "skip reason"); }

void to_json(json& j, ResolutionSource v) { j = std::string(to_string(v)); }
void from_json(const json& j, ResolutionSource& v) {
  read_enum(j, v, parse_resolution_source, "resolution source");
}

void to_json(json& j, const Token& v) {
  j = json{{"surface", v.surface},   {"normalized", v.normalized},
           {"pos", v.pos},           {"index", v.index},
           {"trailing_punct", v.trailing_punct}};
}
void from_json(const json& j, Token& v) {
  j.at("surface").get_to(v.surface);
  j.at("normalized").get_to(v.normalized);
  j.at("pos").get_to(v.pos);
  j.at("index").get_to(v.index);
  j.at("trailing_punct").get_to(v.trailing_punct);
}

void to_json(json& j, const TaggedSentence& v) {
  j = json{{"original", v.original}, {"tokens", v.tokens}};
}
void from_json(const json& j, TaggedSentence& v) {
  j.at("original").get_to(v.original);
  j.at("tokens").get_to(v.tokens);
}

void to_json(json& j, const HomographCandidate& v) {
  j = json{{"token_index", v.token_index}, {"surface", v.surface}, {"in_locution", v.in_locution}};
}
void from_json(const json& j, HomographCandidate& v) {
  j.at("token_index").get_to(v.token_index);
  j.at("surface").get_to(v.surface);
  j.at("in_locution").get_to(v.in_locution);
}

void to_json(json& j, const Replacement& v) {
  j = json{{"token_index", v.token_index},
           {"original", v.original},
           {"substituted", v.substituted},
           {"source", v.source}};
}
void from_json(const json& j, Replacement& v) {
  j.at("token_index").get_to(v.token_index);
  j.at("original").get_to(v.original);
  j.at("substituted").get_to(v.substituted);
  j.at("source").get_to(v.source);
}

void to_json(json& j, const Decision& v) {
  j = json{{"word", v.word},
           {"token_index", v.token_index},
           {"skipped_reason", optional_json(v.skipped_reason)},
           {"resolution_source", optional_json(v.resolution_source)},
           {"concept_iri", optional_json(v.concept_iri)},
           {"target_word", optional_json(v.target_word)}};
}
void from_json(const json& j, Decision& v) {
  j.at("word").get_to(v.word);
  j.at("token_index").get_to(v.token_index);
  read_optional(j, "skipped_reason", v.skipped_reason);
  read_optional(j, "resolution_source", v.resolution_source);
  read_optional(j, "concept_iri", v.concept_iri);
  read_optional(j, "target_word", v.target_word);
}

void to_json(json& j, const TranslationTrace& v) {
  j = json{{"tagged", v.tagged},
           {"candidates", v.candidates},
           {"decisions", v.decisions},
           {"replacements", v.replacements},
           {"pre_mt_text", v.pre_mt_text},
           {"final_text", v.final_text},
           {"iteration", v.iteration},
           {"window_reset", v.window_reset}};
}
void from_json(const json& j, TranslationTrace& v) {
  j.at("tagged").get_to(v.tagged);
  j.at("candidates").get_to(v.candidates);
  j.at("decisions").get_to(v.decisions);
  j.at("replacements").get_to(v.replacements);
  j.at("pre_mt_text").get_to(v.pre_mt_text);
  j.at("final_text").get_to(v.final_text);
  j.at("iteration").get_to(v.iteration);
  j.at("window_reset").get_to(v.window_reset);
}

void to_json(json& j, const MeaningBinding& v) {
  j = json{{"source_word", v.source_word},
           {"target_word", v.target_word},
           {"bound_at_iteration", v.bound_at_iteration}};
}
void from_json(const json& j, MeaningBinding& v) {
  j.at("source_word").get_to(v.source_word);
  j.at("target_word").get_to(v.target_word);
  j.at("bound_at_iteration").get_to(v.bound_at_iteration);
}

void to_json(json& j, const HistoryRecord& v) {
  j = json{{"seq", v.seq},
           {"sender", v.sender},
           {"original", v.original},
           {"translated", v.translated},
           {"trace", v.trace},
           {"iteration", v.iteration},
           {"window_reset", v.window_reset}};
}
void from_json(const json& j, HistoryRecord& v) {
  j.at("seq").get_to(v.seq);
  j.at("sender").get_to(v.sender);
  j.at("original").get_to(v.original);
  j.at("translated").get_to(v.translated);
  j.at("trace").get_to(v.trace);
  j.at("iteration").get_to(v.iteration);
  j.at("window_reset").get_to(v.window_reset);
}

void to_json(json& j, const ContextDomain& v) {
  j = json{{"name", v.name}, {"ontology_id", v.ontology_id}, {"keywords", v.keywords}};
}
void from_json(const json& j, ContextDomain& v) {
  j.at("name").get_to(v.name);
  j.at("ontology_id").get_to(v.ontology_id);
  j.at("keywords").get_to(v.keywords);
}

}  // namespace judge
