// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "judge/error.hpp"
#include "judge/json.hpp"
#include "judge/service.hpp"

namespace judge::service {
namespace {

using nlohmann::json;

constexpr const char* kJson = "application/json";
constexpr const char* kIdPattern = "([0-9A-Za-z_-]+)";

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void error(httplib::Response& res, int status, const std::string& message) {
  reply(res, status, {{"error", message}});
}

json parse_body(const httplib::Request& req) {
  auto body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object())
    throw BadRequest("body", "expected a JSON object");
  return body;
}

// Optional string field; records a field error for any other type.
std::optional<std::string> string_field(const json& body, const char* key,
                                        std::map<std::string, std::string>& errors,
                                        bool required = false) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) {
    if (required) errors[key] = "required";
    return std::nullopt;
  }
  if (!it->is_string()) {
    errors[key] = "expected a string";
    return std::nullopt;
  }
  return it->get<std::string>();
}

json session_json(const Session& s) {
  return {{"session_id", s.id},
          {"source_lang", s.source_lang},
          {"target_lang", s.target_lang},
          {"context", s.context ? json(s.context->name) : json(nullptr)},
          {"ontology_id", s.ontology_id ? json(*s.ontology_id) : json(nullptr)},
          {"iteration", s.iteration},
          {"window_limit", s.window_limit},
          {"temp_log", s.temp_log},
          {"message_count", s.history.size()}};
}

}  // namespace

struct HttpApi::Impl {
  ChatService& service;
  std::string admin_token;
  httplib::Server server;

  Impl(ChatService& svc, std::string token) : service(svc), admin_token(std::move(token)) {}

  bool authorized(const httplib::Request& req, httplib::Response& res) const {
    if (admin_token.empty() || req.get_header_value("X-Admin-Token") == admin_token) return true;
    error(res, 401, "missing or invalid X-Admin-Token");
    return false;
  }

  // Maps domain exceptions onto status codes.
  template <typename Fn>
  void guarded(httplib::Response& res, Fn&& fn) {
    try {
      fn();
    } catch (const BadRequest& e) {
      reply(res, 400, {{"error", e.what()}, {"errors", e.errors()}});
    } catch (const NotFound& e) {
      error(res, 404, e.what());
    } catch (const ConfigError& e) {
      error(res, 422, e.what());
    } catch (const LoadError& e) {
      reply(res, 400, {{"error", e.what()}, {"errors", {{"body", e.what()}}}});
    } catch (const PipelineError& e) {
      reply(res, 502, {{"error", e.what()}, {"trace", e.trace()}});
    }
  }

  void routes() {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type, X-Admin-Token");
      res.status = 204;
    });
    server.set_exception_handler(
        [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
          try {
            std::rethrow_exception(ep);
          } catch (const std::exception& e) {
            error(res, 500, e.what());
          } catch (...) {
            error(res, 500, "internal error");
          }
        });

    server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      reply(res, 200, {{"status", "ok"}});
    });

    server.Get("/ontologies", [this](const httplib::Request&, httplib::Response& res) {
      json list = json::array();
      const auto& registry = service.resources().ontologies;
      for (const auto& id : registry.ids())
        list.push_back({{"id", id}, {"concepts", registry.find(id)->size()}});
      reply(res, 200, {{"ontologies", std::move(list)}});
    });

    server.Get("/contexts", [this](const httplib::Request&, httplib::Response& res) {
      reply(res, 200, {{"contexts", service.resources().contexts}});
    });

    server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        auto body = parse_body(req);
        std::map<std::string, std::string> errors;
        CreateSessionRequest request;
        if (auto v = string_field(body, "source_lang", errors, true)) request.source_lang = *v;
        if (auto v = string_field(body, "target_lang", errors, true)) request.target_lang = *v;
        request.context_id = string_field(body, "context_id", errors);
        request.ontology_id = string_field(body, "ontology_id", errors);
        if (!errors.empty()) throw BadRequest(std::move(errors));
        auto session = service.create_session(request);
        reply(res, 201, {{"session_id", session.id}, {"session", session_json(session)}});
      });
    });

    server.Get("/sessions", [this](const httplib::Request&, httplib::Response& res) {
      reply(res, 200, {{"sessions", service.session_ids()}});
    });

    server.Get(std::string("/sessions/") + kIdPattern,
               [this](const httplib::Request& req, httplib::Response& res) {
                 guarded(res, [&] {
                   reply(res, 200, session_json(service.snapshot(req.matches[1])));
                 });
               });

    server.Post(std::string("/sessions/") + kIdPattern + "/messages",
                [this](const httplib::Request& req, httplib::Response& res) {
                  guarded(res, [&] {
                    std::string id = req.matches[1];
                    service.snapshot(id);  // 404 before body validation
                    auto body = parse_body(req);
                    std::map<std::string, std::string> errors;
                    auto sender = string_field(body, "sender", errors, true);
                    auto text = string_field(body, "text", errors, true);
                    if (!errors.empty()) throw BadRequest(std::move(errors));
                    auto result = service.post_message(id, *sender, *text);
                    reply(res, 200, {{"translated", result.final_text}, {"trace", result.trace}});
                  });
                });

    server.Get(std::string("/sessions/") + kIdPattern + "/history",
               [this](const httplib::Request& req, httplib::Response& res) {
                 guarded(res, [&] {
                   reply(res, 200, {{"records", service.history(req.matches[1])}});
                 });
               });

    server.Post(std::string("/sessions/") + kIdPattern + "/seed",
                [this](const httplib::Request& req, httplib::Response& res) {
                  if (!authorized(req, res)) return;
                  guarded(res, [&] {
                    std::string id = req.matches[1];
                    service.snapshot(id);
                    auto body = parse_body(req);
                    auto it = body.find("bindings");
                    if (it == body.end() || !it->is_array() || it->empty())
                      throw BadRequest("bindings", "expected a non-empty array");
                    std::vector<std::pair<std::string, std::string>> bindings;
                    std::map<std::string, std::string> errors;
                    for (std::size_t i = 0; i < it->size(); ++i) {
                      const auto& b = (*it)[i];
                      auto key = "bindings[" + std::to_string(i) + "]";
                      if (!b.is_object() || !b.contains("source_word") ||
                          !b.contains("target_word") || !b["source_word"].is_string() ||
                          !b["target_word"].is_string() ||
                          b["source_word"].get<std::string>().empty() ||
                          b["target_word"].get<std::string>().empty()) {
                        errors[key] = "expected {source_word, target_word} strings";
                        continue;
                      }
                      bindings.emplace_back(b["source_word"], b["target_word"]);
                    }
                    if (!errors.empty()) throw BadRequest(std::move(errors));
                    auto step = service.seed(id, bindings);
                    reply(res, 200,
                          {{"iteration", step.iteration}, {"window_reset", step.window_reset}});
                  });
                });

    server.Post("/admin/logs", [this](const httplib::Request& req, httplib::Response& res) {
      if (!authorized(req, res)) return;
      guarded(res, [&] {
        auto selected = service.select_context(req.body);
        reply(res, 200,
              {{"selected_context", selected ? json(selected->name) : json(nullptr)},
               {"ontology_id", selected ? json(selected->ontology_id) : json(nullptr)}});
      });
    });
  }
};

HttpApi::HttpApi(ChatService& service, std::string admin_token, std::filesystem::path static_dir)
    : impl_(std::make_unique<Impl>(service, std::move(admin_token))) {
  impl_->routes();
  if (!static_dir.empty()) impl_->server.set_mount_point("/", static_dir.string());
}

HttpApi::~HttpApi() { stop(); }

int HttpApi::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpApi::listen() { return impl_->server.listen_after_bind(); }

void HttpApi::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace judge::service
