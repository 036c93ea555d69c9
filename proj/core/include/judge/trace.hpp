// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judge/morphology.hpp"
#include "judge/translation.hpp"

namespace judge {

enum class SkipReason { locution, not_in_ontology, no_ontology };

std::string_view to_string(SkipReason reason);
std::optional<SkipReason> parse_skip_reason(std::string_view name);

/// What happened to one homograph candidate. Exactly one of `skipped_reason`
/// and `target_word` is set.
struct Decision {
  std::string word;
  std::size_t token_index = 0;
  std::optional<SkipReason> skipped_reason;
  std::optional<ResolutionSource> resolution_source;
  std::optional<std::string> concept_iri;
  std::optional<std::string> target_word;

  bool operator==(const Decision&) const = default;
};

struct TranslationTrace {
  TaggedSentence tagged;
  std::vector<HomographCandidate> candidates;
  std::vector<Decision> decisions;
  std::vector<Replacement> replacements;
  std::string pre_mt_text;
  std::string final_text;
  std::uint32_t iteration = 0;
  bool window_reset = false;

  bool operator==(const TranslationTrace&) const = default;
};

}  // namespace judge
