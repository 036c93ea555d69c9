// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/journal.hpp"

#include <algorithm>
#include <fstream>

#include "judge/error.hpp"
#include "judge/json.hpp"

namespace judge {

using nlohmann::json;

SessionJournal::SessionJournal(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path SessionJournal::meta_path(const std::string& id) const {
  return dir_ / (id + ".meta.json");
}

std::filesystem::path SessionJournal::log_path(const std::string& id) const {
  return dir_ / (id + ".jsonl");
}

void SessionJournal::create(const Session& session) const {
  json meta{{"id", session.id},
            {"source_lang", session.source_lang},
            {"target_lang", session.target_lang},
            {"context", session.context ? json(*session.context) : json(nullptr)},
            {"ontology_id", session.ontology_id ? json(*session.ontology_id) : json(nullptr)},
            {"window_limit", session.window_limit}};
  std::ofstream out(meta_path(session.id), std::ios::trunc);
  if (!out) throw LoadError("cannot write " + meta_path(session.id).string());
  out << meta.dump() << '\n';
  // Touch the record stream so an idle session still lists.
  std::ofstream(log_path(session.id), std::ios::app);
}

void SessionJournal::append_line(const std::string& id, const json& record) const {
  std::ofstream out(log_path(id), std::ios::app);
  if (!out) throw LoadError("cannot append to " + log_path(id).string());
  out << record.dump() << '\n';
  out.flush();
}

void SessionJournal::append(const Session& session, const HistoryRecord& record) const {
  append_line(session.id, json(record));
}

void SessionJournal::append_seed(
    const Session& session, std::uint64_t seq, IterationStep step,
    std::span<const std::pair<std::string, std::string>> bindings) const {
  json seeded = json::array();
  for (const auto& [source, target] : bindings)
    seeded.push_back({{"source_word", source}, {"target_word", target}});
  append_line(session.id, json{{"seq", seq},
                               {"sender", ""},
                               {"original", ""},
                               {"translated", ""},
                               {"trace", nullptr},
                               {"iteration", step.iteration},
                               {"window_reset", step.window_reset},
                               {"seeded_bindings", std::move(seeded)}});
}

Session replay_session(Session session, const std::vector<json>& records) {
  for (const auto& r : records) {
    auto seq = r.at("seq").get<std::uint64_t>();
    if (seq != session.next_seq)
      throw LoadError("session " + session.id + ": expected record " +
                      std::to_string(session.next_seq) + ", found " + std::to_string(seq));
    IterationStep expected{r.at("iteration").get<std::uint32_t>(),
                           r.at("window_reset").get<bool>()};

    if (auto seeded = r.find("seeded_bindings"); seeded != r.end()) {
      std::vector<std::pair<std::string, std::string>> bindings;
      for (const auto& b : *seeded)
        bindings.emplace_back(b.at("source_word").get<std::string>(),
                              b.at("target_word").get<std::string>());
      if (seed_bindings(session, bindings) != expected)
        throw LoadError("session " + session.id + ": iteration mismatch at record " +
                        std::to_string(seq));
      continue;
    }

    auto record = r.get<HistoryRecord>();
    if (advance_iteration(session) != expected)
      throw LoadError("session " + session.id + ": iteration mismatch at record " +
                      std::to_string(seq));
    for (const auto& rep : record.trace.replacements)
      record_binding(session, rep.original, rep.substituted);
    session.history.push_back(std::move(record));
    ++session.next_seq;
  }
  return session;
}

Session SessionJournal::load(const std::string& id) const {
  std::ifstream meta_in(meta_path(id));
  if (!meta_in) throw LoadError("no journal for session " + id);
  Session session;
  try {
    auto meta = json::parse(meta_in);
    meta.at("id").get_to(session.id);
    meta.at("source_lang").get_to(session.source_lang);
    meta.at("target_lang").get_to(session.target_lang);
    if (!meta.at("context").is_null()) session.context = meta.at("context").get<ContextDomain>();
    if (!meta.at("ontology_id").is_null())
      session.ontology_id = meta.at("ontology_id").get<std::string>();
    meta.at("window_limit").get_to(session.window_limit);
  } catch (const json::exception& e) {
    throw LoadError("session " + id + ": bad metadata: " + e.what());
  }

  std::vector<json> records;
  std::ifstream log_in(log_path(id));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(log_in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw LoadError("session " + id + ": " + e.what(), line_no);
    }
  }
  try {
    return replay_session(std::move(session), records);
  } catch (const json::exception& e) {
    throw LoadError("session " + id + ": " + e.what());
  }
}

std::vector<Session> SessionJournal::load_all() const {
  std::vector<std::string> ids;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    auto name = entry.path().filename().string();
    constexpr std::string_view kSuffix = ".meta.json";
    if (name.size() > kSuffix.size() && name.ends_with(kSuffix))
      ids.push_back(name.substr(0, name.size() - kSuffix.size()));
  }
  std::sort(ids.begin(), ids.end());
  std::vector<Session> out;
  for (const auto& id : ids) out.push_back(load(id));
  return out;
}

}  // namespace judge
