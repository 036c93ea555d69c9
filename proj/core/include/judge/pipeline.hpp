// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "judge/dialogue.hpp"
#include "judge/lexicon.hpp"
#include "judge/skos.hpp"
#include "judge/trace.hpp"
#include "judge/translation.hpp"

namespace judge {

struct TranslationResult {
  std::string final_text;
  TranslationTrace trace;

  bool operator==(const TranslationResult&) const = default;
};

/// Everything read-only the pipeline consults.
struct PipelineResources {
  const Tagger& tagger;
  const OntologyRegistry& ontologies;
};

/// The MT backend failed. `trace()` holds everything up to the backend call
/// (no final_text). The session is left as it was before the message.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string& what, TranslationTrace partial)
      : std::runtime_error(what), trace_(std::move(partial)) {}
  const TranslationTrace& trace() const noexcept { return trace_; }

 private:
  TranslationTrace trace_;
};

/// Decision for one candidate, in precedence order: locution, temporary log,
/// ontology (scan for the label in the source language, then the label query
/// in the target language), otherwise skipped. Reads the session only.
/// Throws ConfigError when the session's ontology is not registered.
Decision resolve_candidate(const Session& session, const HomographCandidate& candidate,
                           const OntologyRegistry& ontologies);

/// Runs one message through the method: advance the iteration window, tag,
/// resolve candidates left to right, pre-translate, record bindings, call the
/// backend, append to history. The session is only modified on success.
TranslationResult translate_message(Session& session, std::string_view sender,
                                    std::string_view text, const MtBackend& backend,
                                    const PipelineResources& resources);

}  // namespace judge
