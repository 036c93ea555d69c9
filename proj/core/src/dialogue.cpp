// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/dialogue.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "judge/error.hpp"
#include "judge/text.hpp"

namespace judge {

std::string new_session_id() {
  thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx",
                static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(rng()));
  return buf;
}

Session create_session(std::string source_lang, std::string target_lang,
                       std::optional<ContextDomain> context,
                       std::optional<std::string> ontology_id,
                       const OntologyRegistry& registry, std::uint32_t window_limit) {
  if (!text::is_language_tag(source_lang))
    throw ConfigError("invalid source language tag '" + source_lang + "'");
  if (!text::is_language_tag(target_lang))
    throw ConfigError("invalid target language tag '" + target_lang + "'");
  if (window_limit == 0) throw ConfigError("window limit must be at least 1");

  if (!ontology_id && context && !context->ontology_id.empty())
    ontology_id = context->ontology_id;
  if (ontology_id && !registry.contains(*ontology_id))
    throw ConfigError("unknown ontology '" + *ontology_id + "'");

  Session s;
  s.id = new_session_id();
  s.source_lang = std::move(source_lang);
  s.target_lang = std::move(target_lang);
  s.context = std::move(context);
  s.ontology_id = std::move(ontology_id);
  s.window_limit = window_limit;
  return s;
}

IterationStep advance_iteration(Session& session) {
  if (session.iteration >= session.window_limit) {
    session.temp_log.clear();
    session.iteration = 1;
    return {1, true};
  }
  ++session.iteration;
  return {session.iteration, false};
}

std::optional<std::string> lookup_binding(const Session& session, std::string_view word) {
  auto key = text::to_lower(word);
  for (const auto& b : session.temp_log)
    if (b.source_word == key) return b.target_word;
  return std::nullopt;
}

void record_binding(Session& session, std::string_view source_word,
                    std::string_view target_word) {
  auto key = text::to_lower(text::trim(source_word));
  auto target = std::string(text::trim(target_word));
  if (key.empty() || target.empty()) throw ContractViolation("record_binding: empty word");
  if (session.iteration == 0)
    throw ContractViolation("record_binding: no iteration started; call advance_iteration");
  std::erase_if(session.temp_log, [&](const MeaningBinding& b) { return b.source_word == key; });
  session.temp_log.push_back({std::move(key), std::move(target), session.iteration});
}

Session without_history(const Session& session) {
  Session out;
  out.id = session.id;
  out.source_lang = session.source_lang;
  out.target_lang = session.target_lang;
  out.context = session.context;
  out.ontology_id = session.ontology_id;
  out.temp_log = session.temp_log;
  out.iteration = session.iteration;
  out.window_limit = session.window_limit;
  out.next_seq = session.next_seq;
  return out;
}

void commit(Session& session, Session staged, std::optional<HistoryRecord> record) {
  if (record) session.history.push_back(std::move(*record));
  staged.history = std::move(session.history);
  session = std::move(staged);
}

IterationStep seed_bindings(Session& session,
                            std::span<const std::pair<std::string, std::string>> bindings) {
  auto step = advance_iteration(session);
  for (const auto& [source, target] : bindings) record_binding(session, source, target);
  ++session.next_seq;
  return step;
}

}  // namespace judge
