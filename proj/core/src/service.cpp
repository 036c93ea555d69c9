// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/service.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "judge/error.hpp"
#include "judge/text.hpp"

namespace judge::service {
namespace {

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p.lexically_normal();
}

}  // namespace

std::string ServiceConfig::host() const {
  auto colon = listen_address.rfind(':');
  return colon == std::string::npos ? listen_address : listen_address.substr(0, colon);
}

int ServiceConfig::port() const {
  auto colon = listen_address.rfind(':');
  if (colon == std::string::npos) return 8080;
  int port = -1;
  auto s = std::string_view(listen_address).substr(colon + 1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), port);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return -1;
  return port;
}

void apply_setting(ServiceConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir) {
  value = text::trim(value);
  if (key == "listen_address") {
    config.listen_address = std::string(value);
  } else if (key == "ontology_dir") {
    config.ontology_dir = resolve(base_dir, value);
  } else if (key == "lexicon_path") {
    config.lexicon_path = resolve(base_dir, value);
  } else if (key == "phrase_table_path") {
    config.phrase_table_path = resolve(base_dir, value);
  } else if (key == "context_config_path") {
    config.context_config_path = resolve(base_dir, value);
  } else if (key == "persistence_dir") {
    config.persistence_dir = value.empty() ? std::filesystem::path() : resolve(base_dir, value);
  } else if (key == "static_dir") {
    config.static_dir = value.empty() ? std::filesystem::path() : resolve(base_dir, value);
  } else if (key == "admin_token") {
    config.admin_token = std::string(value);
  } else if (key == "window_limit") {
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc{} || ptr != value.data() + value.size() || n == 0)
      throw LoadError("window_limit must be a positive integer");
    config.window_limit = n;
  } else {
    throw LoadError("unknown setting '" + std::string(key) + "'");
  }
}

ServiceConfig parse_config(std::string_view document, const std::filesystem::path& base_dir) {
  ServiceConfig config;
  std::size_t line_no = 0;
  for (auto line : text::split(document, '\n')) {
    ++line_no;
    line = text::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw LoadError("expected key = value", line_no);
    try {
      apply_setting(config, text::trim(line.substr(0, eq)), line.substr(eq + 1), base_dir);
    } catch (const LoadError& e) {
      throw LoadError(e.what(), line_no);
    }
  }
  return config;
}

ServiceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

void validate(const ServiceConfig& config) {
  auto require = [](const std::filesystem::path& p, std::string_view what, bool dir) {
    std::error_code ec;
    if (p.empty()) throw ConfigError(std::string(what) + " is not set");
    bool ok = dir ? std::filesystem::is_directory(p, ec) : std::filesystem::is_regular_file(p, ec);
    if (!ok) throw ConfigError(std::string(what) + " " + p.string() + " not found");
  };
  require(config.ontology_dir, "ontology_dir", true);
  require(config.lexicon_path, "lexicon_path", false);
  require(config.phrase_table_path, "phrase_table_path", false);
  require(config.context_config_path, "context_config_path", false);
  if (config.window_limit == 0) throw ConfigError("window_limit must be at least 1");
  if (config.port() < 0 || config.port() > 65535)
    throw ConfigError("bad listen_address '" + config.listen_address + "'");
}

Resources Resources::load(const ServiceConfig& config) {
  Resources r;
  r.lexicon = Lexicon::load_file(config.lexicon_path);
  r.ontologies = OntologyRegistry::load_directory(config.ontology_dir);
  r.contexts = load_contexts_file(config.context_config_path);
  r.backend = std::make_shared<MockStatisticalMt>(PhraseTable::load_file(config.phrase_table_path));
  for (const auto& c : r.contexts)
    if (!r.ontologies.contains(c.ontology_id))
      throw ConfigError("context '" + c.name + "' refers to unknown ontology '" +
                        c.ontology_id + "'");
  return r;
}

ChatService::ChatService(std::shared_ptr<const Resources> resources, std::uint32_t window_limit,
                         std::unique_ptr<SessionJournal> journal)
    : resources_(std::move(resources)), window_limit_(window_limit), journal_(std::move(journal)) {
  if (window_limit_ == 0) throw ConfigError("window_limit must be at least 1");
  if (journal_) {
    for (auto& s : journal_->load_all()) {
      auto slot = std::make_shared<Slot>();
      slot->session = std::move(s);
      sessions_.emplace(slot->session.id, std::move(slot));
    }
  }
}

std::shared_ptr<ChatService::Slot> ChatService::slot(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFound("unknown session '" + id + "'");
  return it->second;
}

Session ChatService::create_session(const CreateSessionRequest& request) {
  std::map<std::string, std::string> errors;
  if (!text::is_language_tag(request.source_lang))
    errors["source_lang"] = "expected a two-letter lowercase language tag";
  if (!text::is_language_tag(request.target_lang))
    errors["target_lang"] = "expected a two-letter lowercase language tag";
  if (!errors.empty()) throw BadRequest(std::move(errors));

  std::optional<ContextDomain> context;
  if (request.context_id) {
    const auto* c = find_context(resources_->contexts, *request.context_id);
    if (!c) throw ConfigError("unknown context '" + *request.context_id + "'");
    context = *c;
  }
  auto session = judge::create_session(request.source_lang, request.target_lang, context,
                                       request.ontology_id, resources_->ontologies, window_limit_);
  if (journal_) journal_->create(session);

  auto slot = std::make_shared<Slot>();
  slot->session = session;
  std::unique_lock lock(sessions_mutex_);
  sessions_.emplace(session.id, std::move(slot));
  return session;
}

TranslationResult ChatService::post_message(const std::string& session_id,
                                            std::string_view sender, std::string_view text) {
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  auto before = without_history(s->session);
  auto result = translate_message(s->session, sender, text, *resources_->backend,
                                  {resources_->lexicon, resources_->ontologies});
  if (journal_) {
    try {
      journal_->append(s->session, s->session.history.back());
    } catch (...) {
      s->session.history.pop_back();
      commit(s->session, std::move(before));
      throw;
    }
  }
  return result;
}

IterationStep ChatService::seed(const std::string& session_id,
                                const std::vector<std::pair<std::string, std::string>>& bindings) {
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  Session next = without_history(s->session);
  auto seq = next.next_seq;
  auto step = seed_bindings(next, bindings);
  if (journal_) journal_->append_seed(next, seq, step, bindings);
  commit(s->session, std::move(next));
  return step;
}

std::vector<HistoryRecord> ChatService::history(const std::string& session_id) const {
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  return s->session.history;
}

Session ChatService::snapshot(const std::string& session_id) const {
  auto s = slot(session_id);
  std::lock_guard lock(s->mutex);
  return s->session;
}

std::vector<std::string> ChatService::session_ids() const {
  std::shared_lock lock(sessions_mutex_);
  std::vector<std::string> ids;
  for (const auto& [id, slot] : sessions_) ids.push_back(id);
  return ids;
}

std::optional<ContextDomain> ChatService::select_context(std::string_view log_document) const {
  return select_session_context(parse_message_log(log_document), resources_->contexts);
}

}  // namespace judge::service
