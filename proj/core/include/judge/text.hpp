// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 helpers shared by every module. Case mapping covers ASCII and
// the Latin-1 Supplement block, which is all Portuguese needs; other code
// points pass through untouched.
namespace judge::text {

std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

std::string_view trim(std::string_view s);

/// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> split_whitespace(std::string_view s);

/// Splits on a single character, keeping empty pieces.
std::vector<std::string_view> split(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_valid_utf8(std::string_view s);

/// Two lowercase ASCII letters ("pt", "en").
bool is_language_tag(std::string_view s);

}  // namespace judge::text
