// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/trace.hpp"

namespace judge {

std::string_view to_string(SkipReason reason) {
  switch (reason) {
    case SkipReason::locution: return "locution";
    case SkipReason::not_in_ontology: return "not_in_ontology";
    case SkipReason::no_ontology: return "no_ontology";
  }
  return "locution";
}

std::optional<SkipReason> parse_skip_reason(std::string_view name) {
  if (name == "locution") return SkipReason::locution;
  if (name == "not_in_ontology") return SkipReason::not_in_ontology;
  if (name == "no_ontology") return SkipReason::no_ontology;
  return std::nullopt;
}

}  // namespace judge
