// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include "judge/context.hpp"
#include "judge/dialogue.hpp"
#include "judge/pipeline.hpp"
#include "judge/trace.hpp"

// JSON forms used on the wire and in session journals. Field names are the
// snake_case struct field names; absent optionals are written as null and
// accepted as null or missing.
namespace judge {

void to_json(nlohmann::json& j, PosTag v);
void from_json(const nlohmann::json& j, PosTag& v);
void to_json(nlohmann::json& j, SkipReason v);
void from_json(const nlohmann::json& j, SkipReason& v);
void to_json(nlohmann::json& j, ResolutionSource v);
void from_json(const nlohmann::json& j, ResolutionSource& v);

void to_json(nlohmann::json& j, const Token& v);
void from_json(const nlohmann::json& j, Token& v);
void to_json(nlohmann::json& j, const TaggedSentence& v);
void from_json(const nlohmann::json& j, TaggedSentence& v);
void to_json(nlohmann::json& j, const HomographCandidate& v);
void from_json(const nlohmann::json& j, HomographCandidate& v);
void to_json(nlohmann::json& j, const Replacement& v);
void from_json(const nlohmann::json& j, Replacement& v);
void to_json(nlohmann::json& j, const Decision& v);
void from_json(const nlohmann::json& j, Decision& v);
void to_json(nlohmann::json& j, const TranslationTrace& v);
void from_json(const nlohmann::json& j, TranslationTrace& v);

void to_json(nlohmann::json& j, const MeaningBinding& v);
void from_json(const nlohmann::json& j, MeaningBinding& v);
void to_json(nlohmann::json& j, const HistoryRecord& v);
void from_json(const nlohmann::json& j, HistoryRecord& v);
void to_json(nlohmann::json& j, const ContextDomain& v);
void from_json(const nlohmann::json& j, ContextDomain& v);

}  // namespace judge
