// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/pipeline.hpp"

#include <variant>

#include "judge/error.hpp"
#include "judge/morphology.hpp"
#include "judge/sparql.hpp"
#include "judge/text.hpp"

namespace judge {
namespace {

Decision skipped(const HomographCandidate& c, SkipReason reason) {
  Decision d;
  d.word = c.surface;
  d.token_index = c.token_index;
  d.skipped_reason = reason;
  return d;
}

}  // namespace

Decision resolve_candidate(const Session& session, const HomographCandidate& candidate,
                           const OntologyRegistry& ontologies) {
  if (candidate.in_locution) return skipped(candidate, SkipReason::locution);

  if (auto bound = lookup_binding(session, candidate.surface)) {
    Decision d;
    d.word = candidate.surface;
    d.token_index = candidate.token_index;
    d.resolution_source = ResolutionSource::temp_log;
    d.target_word = std::move(*bound);
    return d;
  }

  if (!session.ontology_id) return skipped(candidate, SkipReason::no_ontology);
  const auto* store = ontologies.find(*session.ontology_id);
  if (!store) throw ConfigError("unknown ontology '" + *session.ontology_id + "'");

  // Scan first so the query only runs for labels the ontology holds.
  const auto* found = store->scan_for_term(candidate.surface, session.source_lang);
  if (!found) return skipped(candidate, SkipReason::not_in_ontology);

  auto rows = sparql::evaluate(*store, sparql::label_query(found->iri, session.target_lang));
  for (const auto& row : rows) {
    auto it = row.bindings.find("prefLabel");
    if (it == row.bindings.end()) continue;
    const auto* literal = std::get_if<sparql::Literal>(&it->second);
    if (!literal || literal->text.empty()) continue;
    Decision d;
    d.word = candidate.surface;
    d.token_index = candidate.token_index;
    d.resolution_source = ResolutionSource::ontology;
    d.concept_iri = found->iri;
    d.target_word = text::to_lower(literal->text);
    return d;
  }
  // The concept exists but has no label in the target language.
  auto d = skipped(candidate, SkipReason::not_in_ontology);
  d.concept_iri = found->iri;
  return d;
}

TranslationResult translate_message(Session& session, std::string_view sender,
                                    std::string_view message, const MtBackend& backend,
                                    const PipelineResources& resources) {
  Session next = without_history(session);
  TranslationTrace trace;

  auto step = advance_iteration(next);
  trace.iteration = step.iteration;
  trace.window_reset = step.window_reset;

  trace.tagged = analyze(message, resources.tagger);
  trace.candidates = find_candidates(trace.tagged);

  TaggedSentence working = trace.tagged;
  for (const auto& candidate : trace.candidates) {
    auto decision = resolve_candidate(next, candidate, resources.ontologies);
    if (decision.target_word) {
      auto outcome =
          replace(working, candidate.token_index, *decision.target_word,
                  decision.resolution_source.value_or(ResolutionSource::ontology));
      working = std::move(outcome.sentence);
      trace.replacements.push_back(std::move(outcome.replacement));
    }
    trace.decisions.push_back(std::move(decision));
  }
  trace.pre_mt_text = working.render();

  for (const auto& r : trace.replacements) record_binding(next, r.original, r.substituted);

  try {
    trace.final_text = backend.translate(trace.pre_mt_text, next.source_lang, next.target_lang);
  } catch (const std::exception& e) {
    throw PipelineError("translation backend '" + backend.name() + "' failed: " + e.what(),
                        std::move(trace));
  }

  HistoryRecord record;
  record.seq = next.next_seq++;
  record.sender = std::string(sender);
  record.original = std::string(message);
  record.translated = trace.final_text;
  record.trace = trace;
  record.iteration = trace.iteration;
  record.window_reset = trace.window_reset;
  commit(session, std::move(next), std::move(record));
  return {trace.final_text, std::move(trace)};
}

}  // namespace judge
