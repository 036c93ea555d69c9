// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "judge/context.hpp"
#include "judge/dialogue.hpp"
#include "judge/journal.hpp"
#include "judge/lexicon.hpp"
#include "judge/pipeline.hpp"
#include "judge/skos.hpp"
#include "judge/translation.hpp"

namespace judge::service {

struct ServiceConfig {
  std::string listen_address = "127.0.0.1:8080";
  std::filesystem::path ontology_dir;
  std::filesystem::path lexicon_path;
  std::filesystem::path phrase_table_path;
  std::filesystem::path context_config_path;
  std::filesystem::path persistence_dir;
  std::uint32_t window_limit = Session::kDefaultWindowLimit;
  /// Required in X-Admin-Token for /admin/* and seeding when non-empty.
  std::string admin_token;
  /// Optional directory served at / (the chat client build).
  std::filesystem::path static_dir;

  std::string host() const;
  int port() const;
};

/// `key = value` lines, '#' comments. Relative paths resolve against the
/// config file's directory. Throws LoadError on unknown keys or bad values.
ServiceConfig load_config(const std::filesystem::path& path);
ServiceConfig parse_config(std::string_view document, const std::filesystem::path& base_dir);

/// Applies one `key=value` override (the CLI's flags use this too).
void apply_setting(ServiceConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir = {});

/// Startup validation: paths exist, window_limit >= 1. Throws ConfigError.
void validate(const ServiceConfig& config);

/// Read-only data loaded at startup.
struct Resources {
  Lexicon lexicon;
  OntologyRegistry ontologies;
  std::vector<ContextDomain> contexts;
  std::shared_ptr<const MtBackend> backend;

  static Resources load(const ServiceConfig& config);
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field-level validation failure (HTTP 400).
class BadRequest : public std::runtime_error {
 public:
  explicit BadRequest(std::map<std::string, std::string> errors)
      : std::runtime_error("invalid request"), errors_(std::move(errors)) {}
  BadRequest(const std::string& field, const std::string& message)
      : BadRequest(std::map<std::string, std::string>{{field, message}}) {}
  const std::map<std::string, std::string>& errors() const noexcept { return errors_; }

 private:
  std::map<std::string, std::string> errors_;
};

struct CreateSessionRequest {
  std::string source_lang = "pt";
  std::string target_lang = "en";
  std::optional<std::string> context_id;
  std::optional<std::string> ontology_id;
};

/// Session management around the pipeline. Thread-safe: requests for
/// different sessions run concurrently, messages to one session are
/// processed one at a time in arrival order.
class ChatService {
 public:
  /// `journal` may be null (no persistence). Existing journaled sessions are
  /// replayed on construction.
  ChatService(std::shared_ptr<const Resources> resources, std::uint32_t window_limit,
              std::unique_ptr<SessionJournal> journal);

  Session create_session(const CreateSessionRequest& request);
  TranslationResult post_message(const std::string& session_id, std::string_view sender,
                                 std::string_view text);
  IterationStep seed(const std::string& session_id,
                     const std::vector<std::pair<std::string, std::string>>& bindings);

  std::vector<HistoryRecord> history(const std::string& session_id) const;
  Session snapshot(const std::string& session_id) const;
  std::vector<std::string> session_ids() const;

  /// Context chosen from an uploaded message log, or none.
  std::optional<ContextDomain> select_context(std::string_view log_document) const;

  const Resources& resources() const noexcept { return *resources_; }

 private:
  struct Slot {
    mutable std::mutex mutex;
    Session session;
  };

  std::shared_ptr<Slot> slot(const std::string& id) const;

  std::shared_ptr<const Resources> resources_;
  std::uint32_t window_limit_;
  std::unique_ptr<SessionJournal> journal_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
};

/// HTTP+JSON front end. See docs/api.md for the routes.
class HttpApi {
 public:
  HttpApi(ChatService& service, std::string admin_token = {},
          std::filesystem::path static_dir = {});
  ~HttpApi();
  HttpApi(const HttpApi&) = delete;
  HttpApi& operator=(const HttpApi&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks serving until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace judge::service
