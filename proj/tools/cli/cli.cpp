// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "judge/context.hpp"
#include "judge/dialogue.hpp"
#include "judge/error.hpp"
#include "judge/eval.hpp"
#include "judge/journal.hpp"
#include "judge/json.hpp"
#include "judge/lexicon.hpp"
#include "judge/pipeline.hpp"
#include "judge/service.hpp"
#include "judge/skos.hpp"
#include "judge/translation.hpp"

namespace judge::cli {
namespace {

struct TranslateOptions {
  std::string lexicon;
  std::string ontology;
  std::string ontology_dir;
  std::string phrase_table;
  std::string text;
  std::string source_lang = "pt";
  std::string target_lang = "en";
  std::vector<std::string> seeds;
  bool trace = false;
  bool baseline = false;
};

struct ServeOptions {
  std::string config;
  std::vector<std::string> overrides;
};

struct EvalOptions {
  std::string corpus;
  std::string lexicon;
  std::string ontology_dir;
  std::string phrase_table;
  std::string contexts;
  bool json = false;
  bool details = false;
};

struct ContextOptions {
  std::string log;
  std::string contexts;
  std::string matrix;
  std::vector<std::string> words;
};

std::pair<std::string, std::string> split_binding(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
    throw ConfigError("--seed-binding expects src=tgt, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

int do_translate(const TranslateOptions& o, std::ostream& out) {
  auto table = PhraseTable::load_file(o.phrase_table);
  MockStatisticalMt backend(std::move(table));
  if (o.baseline) {
    out << backend.translate(o.text, o.source_lang, o.target_lang) << '\n';
    return kOk;
  }
  auto lexicon = Lexicon::load_file(o.lexicon);
  OntologyRegistry registry;
  if (!o.ontology_dir.empty()) registry = OntologyRegistry::load_directory(o.ontology_dir);
  std::optional<std::string> ontology;
  if (!o.ontology.empty()) ontology = o.ontology;
  auto session =
      create_session(o.source_lang, o.target_lang, std::nullopt, ontology, registry);
  if (!o.seeds.empty()) {
    std::vector<std::pair<std::string, std::string>> bindings;
    for (const auto& s : o.seeds) bindings.push_back(split_binding(s));
    seed_bindings(session, bindings);
  }
  auto result = translate_message(session, "cli", o.text, backend, {lexicon, registry});
  out << result.final_text << '\n';
  if (o.trace) out << nlohmann::json(result.trace).dump(2) << '\n';
  return kOk;
}

std::atomic<service::HttpApi*> g_server{nullptr};

extern "C" void on_signal(int) {
  if (auto* s = g_server.load()) s->stop();
}

int do_serve(const ServeOptions& o, std::ostream& out) {
  auto config = service::load_config(o.config);
  for (const auto& kv : o.overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    service::apply_setting(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  service::validate(config);
  auto resources = std::make_shared<const service::Resources>(service::Resources::load(config));
  std::unique_ptr<SessionJournal> journal;
  if (!config.persistence_dir.empty())
    journal = std::make_unique<SessionJournal>(config.persistence_dir);
  service::ChatService chat(resources, config.window_limit, std::move(journal));
  service::HttpApi api(chat, config.admin_token, config.static_dir);
  int port = api.bind(config.host(), config.port());
  if (port < 0) throw ConfigError("cannot bind " + config.listen_address);
  out << "listening on " << config.host() << ':' << port << std::endl;
  g_server = &api;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  api.listen();
  g_server = nullptr;
  return kOk;
}

int do_eval(const EvalOptions& o, std::ostream& out) {
  auto corpus = eval::load_corpus_file(o.corpus);
  auto lexicon = Lexicon::load_file(o.lexicon);
  auto registry = OntologyRegistry::load_directory(o.ontology_dir);
  auto contexts = load_contexts_file(o.contexts);
  MockStatisticalMt backend(PhraseTable::load_file(o.phrase_table));
  std::vector<eval::Variant> variants{{"mock", &backend, false}, {"mock+judge", &backend, true}};
  auto report = eval::run_eval(corpus, variants, {lexicon, registry, contexts});
  if (o.json) {
    auto j = report.to_json();
    if (o.details) {
      auto rows = nlohmann::json::array();
      for (const auto& c : report.outcomes)
        rows.push_back({{"variant", c.variant},
                        {"source", corpus[c.case_index].source_sentence},
                        {"output", c.output},
                        {"correct", c.correct}});
      j["outcomes"] = std::move(rows);
    }
    out << j.dump(2) << '\n';
  } else {
    out << report.render_table();
    if (o.details)
      for (const auto& c : report.outcomes)
        out << (c.correct ? "ok   " : "FAIL ") << c.variant << " | "
            << corpus[c.case_index].source_sentence << " -> " << c.output << '\n';
  }
  return kOk;
}

int do_context(const ContextOptions& o, std::ostream& out) {
  auto contexts = load_contexts_file(o.contexts);
  if (!o.matrix.empty() || !o.words.empty()) {
    CorrelationMatrix matrix =
        !o.matrix.empty() ? load_matrix_file(o.matrix, contexts)
                          : build_matrix(load_message_log_file(o.log), contexts, o.words);
    auto words = o.words.empty() ? matrix.words() : o.words;
    for (const auto& w : words) {
      auto c = select_context(matrix, w);
      out << w << '\t' << (c ? c->name : "none") << '\n';
    }
    return kOk;
  }
  auto c = select_session_context(load_message_log_file(o.log), contexts);
  out << (c ? c->name + '\t' + c->ontology_id : std::string("none")) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homograph disambiguation middleware for chat translation", "judge"};
  app.require_subcommand(1);

  TranslateOptions tr;
  auto* translate = app.add_subcommand("translate", "Translate one message");
  translate->add_option("--lexicon", tr.lexicon, "POS lexicon (TSV)");
  translate->add_option("--ontology", tr.ontology, "Ontology id bound to the session");
  translate->add_option("--ontology-dir", tr.ontology_dir, "Directory of <id>.rdf files");
  translate->add_option("--phrase-table", tr.phrase_table, "Phrase table (TSV)")->required();
  translate->add_option("--text", tr.text, "Message text")->required();
  translate->add_option("--source-lang", tr.source_lang, "Source language tag");
  translate->add_option("--target-lang", tr.target_lang, "Target language tag");
  translate->add_option("--seed-binding", tr.seeds, "Prior binding src=tgt (repeatable)");
  translate->add_flag("--trace", tr.trace, "Print the decision trace as JSON");
  translate->add_flag("--baseline", tr.baseline, "Skip disambiguation; MT only");
  translate->callback([&] {
    if (!tr.baseline && tr.lexicon.empty())
      throw CLI::ValidationError("--lexicon", "required unless --baseline");
  });

  ServeOptions sv;
  auto* serve = app.add_subcommand("serve", "Run the HTTP chat service");
  serve->add_option("--config", sv.config, "Service config file")->required();
  serve->add_option("--set", sv.overrides, "Override a config key (key=value, repeatable)");

  EvalOptions ev;
  auto* evaluate = app.add_subcommand("eval", "Run the evaluation harness");
  evaluate->add_option("--corpus", ev.corpus, "Evaluation corpus (TSV)")->required();
  evaluate->add_option("--lexicon", ev.lexicon)->required();
  evaluate->add_option("--ontology-dir", ev.ontology_dir)->required();
  evaluate->add_option("--phrase-table", ev.phrase_table)->required();
  evaluate->add_option("--contexts", ev.contexts)->required();
  evaluate->add_flag("--json", ev.json, "Emit JSON instead of a table");
  evaluate->add_flag("--details", ev.details, "Include per-case outputs");

  ContextOptions cx;
  auto* context = app.add_subcommand("context", "Select a context from a message log");
  context->add_option("--log", cx.log, "Message log (sender<TAB>text)");
  context->add_option("--contexts", cx.contexts, "Context configuration")->required();
  context->add_option("--matrix", cx.matrix, "Precomputed correlation matrix");
  context->add_option("--word", cx.words, "Homograph to look up (repeatable)");
  context->callback([&] {
    if (cx.log.empty() && cx.matrix.empty())
      throw CLI::ValidationError("--log", "either --log or --matrix is required");
    if (cx.matrix.empty() && !cx.words.empty() && cx.log.empty())
      throw CLI::ValidationError("--word", "needs --log or --matrix");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*translate) return do_translate(tr, out);
    if (*serve) return do_serve(sv, out);
    if (*evaluate) return do_eval(ev, out);
    if (*context) return do_context(cx, out);
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace judge::cli
