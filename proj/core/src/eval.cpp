// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "judge/dialogue.hpp"
#include "judge/error.hpp"
#include "judge/morphology.hpp"
#include "judge/pipeline.hpp"
#include "judge/text.hpp"

namespace judge::eval {
namespace {

std::vector<std::string> normalized_tokens(std::string_view s) {
  std::vector<std::string> out;
  for (auto& t : tokenize(s)) out.push_back(std::move(t.normalized));
  return out;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::vector<EvalCase> load_corpus(std::istream& in) {
  std::vector<EvalCase> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 4 && fields.size() != 5)
      throw LoadError("expected 4 or 5 TAB-separated fields", line_no);
    EvalCase c;
    c.source_sentence = std::string(text::trim(fields[0]));
    c.homograph = std::string(text::trim(fields[1]));
    c.context_name = std::string(text::trim(fields[2]));
    c.expected_target = std::string(text::trim(fields[3]));
    if (fields.size() == 5 && !text::trim(fields[4]).empty())
      c.forbidden_target = std::string(text::trim(fields[4]));
    if (c.source_sentence.empty() || c.homograph.empty() || c.context_name.empty() ||
        c.expected_target.empty())
      throw LoadError("empty field", line_no);
    auto tokens = normalized_tokens(c.source_sentence);
    if (std::find(tokens.begin(), tokens.end(), text::to_lower(c.homograph)) == tokens.end())
      throw LoadError("homograph '" + c.homograph + "' is not a token of the sentence", line_no);
    corpus.push_back(std::move(c));
  }
  return corpus;
}

std::vector<EvalCase> load_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open corpus " + path.string());
  return load_corpus(in);
}

bool contains_phrase(std::string_view output, std::string_view phrase) {
  auto hay = normalized_tokens(output);
  auto needle = normalized_tokens(phrase);
  if (needle.empty()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

bool semantic_correctness(std::string_view output, const EvalCase& c) {
  if (!contains_phrase(output, c.expected_target)) return false;
  return !(c.forbidden_target && contains_phrase(output, *c.forbidden_target));
}

const Cell* EvalReport::cell(std::string_view variant, std::string_view context) const {
  auto it = cells.find({std::string(variant), std::string(context)});
  return it == cells.end() ? nullptr : &it->second;
}

std::string EvalReport::render_table() const {
  std::vector<std::string> header{"System/Context"};
  header.insert(header.end(), contexts.begin(), contexts.end());
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& v : variants) {
    std::vector<std::string> row{v};
    for (const auto& c : contexts) {
      const auto* x = cell(v, c);
      row.push_back(x ? fixed2(x->fraction()) : "-");
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> count_row{"cases"};
  for (const auto& c : contexts) {
    auto it = counts.find(c);
    count_row.push_back(std::to_string(it == counts.end() ? 0 : it->second));
  }
  rows.push_back(std::move(count_row));

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      const auto& s = rows[r][i];
      std::string pad(width[i] - s.size(), ' ');
      if (i == 0) out += s + pad;
      else out += "  " + pad + s;
    }
    out += '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      out += std::string(total - 2, '-') + '\n';
    }
  }
  return out;
}

nlohmann::json EvalReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& v : variants) {
    nlohmann::json scores = nlohmann::json::object();
    for (const auto& c : contexts) {
      const auto* x = cell(v, c);
      if (!x) continue;
      scores[c] = {{"correct", x->correct}, {"total", x->total}, {"fraction", x->fraction()}};
    }
    rows.push_back({{"variant", v}, {"scores", std::move(scores)}});
  }
  return {{"contexts", contexts}, {"counts", counts}, {"rows", std::move(rows)}};
}

EvalReport run_eval(std::span<const EvalCase> corpus, std::span<const Variant> variants,
                    const EvalResources& resources) {
  EvalReport report;
  std::vector<std::string> problems;
  std::vector<const ContextDomain*> case_context(corpus.size(), nullptr);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    const auto* ctx = find_context(resources.contexts, c.context_name);
    if (!ctx)
      problems.push_back("case " + std::to_string(i + 1) + ": unknown context '" +
                         c.context_name + "'");
    else if (!resources.ontologies.contains(ctx->ontology_id))
      problems.push_back("case " + std::to_string(i + 1) + ": context '" + c.context_name +
                         "' has no registered ontology '" + ctx->ontology_id + "'");
    case_context[i] = ctx;
    if (std::find(report.contexts.begin(), report.contexts.end(), c.context_name) ==
        report.contexts.end())
      report.contexts.push_back(c.context_name);
    ++report.counts[c.context_name];
  }
  if (!problems.empty()) {
    std::string msg = "unresolvable evaluation cases:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ConfigError(msg);
  }
  for (const auto& v : variants) {
    if (!v.backend) throw ConfigError("variant '" + v.name + "' has no backend");
    report.variants.push_back(v.name);
  }

  PipelineResources pipeline{resources.tagger, resources.ontologies};
  for (const auto& v : variants) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& c = corpus[i];
      std::string output;
      if (v.use_judge) {
        auto session = create_session("pt", "en", *case_context[i], std::nullopt,
                                      resources.ontologies);
        output = translate_message(session, "eval", c.source_sentence, *v.backend, pipeline)
                     .final_text;
      } else {
        output = v.backend->translate(c.source_sentence, "pt", "en");
      }
      bool ok = semantic_correctness(output, c);
      auto& cell = report.cells[{v.name, c.context_name}];
      ++cell.total;
      if (ok) ++cell.correct;
      report.outcomes.push_back({v.name, i, std::move(output), ok});
    }
  }
  return report;
}

}  // namespace judge::eval
