// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "judge/dialogue.hpp"

namespace judge {

/// Append-only session persistence. Each session gets
///
///   <dir>/<id>.meta.json  languages, context, ontology, window limit
///   <dir>/<id>.jsonl      one record per line:
///                         {seq, sender, original, translated, trace,
///                          iteration, window_reset}
///
/// Seeded bindings are journaled as a record with a null trace and a
/// `seeded_bindings` array so that replay reproduces the temporary log.
class SessionJournal {
 public:
  explicit SessionJournal(std::filesystem::path dir);

  const std::filesystem::path& directory() const noexcept { return dir_; }

  void create(const Session& session) const;
  void append(const Session& session, const HistoryRecord& record) const;
  void append_seed(const Session& session, std::uint64_t seq, IterationStep step,
                   std::span<const std::pair<std::string, std::string>> bindings) const;

  /// Rebuilds a session by replaying its records through the dialogue
  /// operations. Throws LoadError when the journal is inconsistent.
  Session load(const std::string& id) const;
  std::vector<Session> load_all() const;

 private:
  std::filesystem::path meta_path(const std::string& id) const;
  std::filesystem::path log_path(const std::string& id) const;
  void append_line(const std::string& id, const nlohmann::json& record) const;

  std::filesystem::path dir_;
};

/// Replays journal records on top of a freshly created session.
Session replay_session(Session base, const std::vector<nlohmann::json>& records);

}  // namespace judge
