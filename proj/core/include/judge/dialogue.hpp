// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "judge/context.hpp"
#include "judge/skos.hpp"
#include "judge/trace.hpp"

namespace judge {

/// A word meaning fixed earlier in the conversation.
struct MeaningBinding {
  std::string source_word;  // lowercase
  std::string target_word;
  std::uint32_t bound_at_iteration = 1;

  bool operator==(const MeaningBinding&) const = default;
};

struct HistoryRecord {
  std::uint64_t seq = 0;
  std::string sender;
  std::string original;
  std::string translated;
  TranslationTrace trace;
  std::uint32_t iteration = 0;
  bool window_reset = false;

  bool operator==(const HistoryRecord&) const = default;
};

struct IterationStep {
  std::uint32_t iteration = 0;
  bool window_reset = false;

  bool operator==(const IterationStep&) const = default;
};

/// Per-conversation state. One message at a time: callers serialize access.
struct Session {
  static constexpr std::uint32_t kDefaultWindowLimit = 3;

  std::string id;
  std::string source_lang = "pt";
  std::string target_lang = "en";
  std::optional<ContextDomain> context;
  std::optional<std::string> ontology_id;
  std::vector<MeaningBinding> temp_log;
  std::uint32_t iteration = 0;
  std::uint32_t window_limit = kDefaultWindowLimit;
  std::vector<HistoryRecord> history;
  /// Records written so far, messages and seeds alike; next record's seq.
  std::uint64_t next_seq = 0;

  bool operator==(const Session&) const = default;
};

/// 128-bit random hex identifier.
std::string new_session_id();

/// Fresh session. The ontology is `ontology_id` when given, otherwise the
/// context's. Throws ConfigError for a malformed language tag, an ontology
/// missing from `registry`, or window_limit == 0.
Session create_session(std::string source_lang, std::string target_lang,
                       std::optional<ContextDomain> context,
                       std::optional<std::string> ontology_id,
                       const OntologyRegistry& registry,
                       std::uint32_t window_limit = Session::kDefaultWindowLimit);

/// One message = one iteration. Reaching past the window clears the
/// temporary log and restarts the count at 1.
IterationStep advance_iteration(Session& session);

std::optional<std::string> lookup_binding(const Session& session, std::string_view word);

/// Binds at the current iteration, replacing an older binding of the word.
void record_binding(Session& session, std::string_view source_word,
                    std::string_view target_word);

/// Injects meanings as if one message fixing them had just been processed
/// (advances one iteration, then records each binding). Covers bindings that
/// originate on the target-language side of the conversation.
IterationStep seed_bindings(Session& session,
                            std::span<const std::pair<std::string, std::string>> bindings);

/// Copy of every field except `history`. Lets callers stage changes without
/// paying for the whole conversation.
Session without_history(const Session& session);

/// Moves `staged` into `session`, keeping `session.history` plus `record` if
/// given. Strong guarantee: on failure `session` is unchanged.
void commit(Session& session, Session staged, std::optional<HistoryRecord> record = std::nullopt);

}  // namespace judge
