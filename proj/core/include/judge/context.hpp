// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace judge {

/// A conversation domain ("Music", "Vehicles", ...) recognised by annotation
/// keywords and tied to one ontology.
struct ContextDomain {
  std::string name;
  std::string ontology_id;
  std::set<std::string> keywords;  // lowercase

  bool operator==(const ContextDomain&) const = default;
};

struct LogMessage {
  std::string sender;
  std::string text;

  bool operator==(const LogMessage&) const = default;
};

using MessageLog = std::vector<LogMessage>;

/// Homograph x context association, in percent of the messages containing the
/// word that also carry one of the context's keywords. Rows need not sum to
/// 100 since a message can belong to several contexts.
class CorrelationMatrix {
 public:
  CorrelationMatrix() = default;
  explicit CorrelationMatrix(std::vector<ContextDomain> contexts);

  /// Throws ContractViolation for an unknown context or a value outside
  /// [0, 100].
  void set(std::string_view word, std::string_view context, double percent);

  /// 0 for absent cells.
  double cell(std::string_view word, std::string_view context) const;

  bool has_word(std::string_view word) const;
  std::vector<std::string> words() const;
  const std::vector<ContextDomain>& contexts() const noexcept { return contexts_; }
  const ContextDomain* find_context(std::string_view name) const;

  bool operator==(const CorrelationMatrix&) const = default;

 private:
  std::vector<ContextDomain> contexts_;
  std::map<std::string, std::map<std::string, double, std::less<>>, std::less<>>
      cells_;
};

/// Messages are assigned to every context with at least one whole-token
/// keyword hit; cell(w, c) = 100 * |msgs with w assigned to c| / |msgs with w|.
CorrelationMatrix build_matrix(const MessageLog& log,
                               std::span<const ContextDomain> contexts,
                               std::span<const std::string> homographs);

/// Context with the largest cell for `word`; ties go to the smaller name.
/// None when the word is absent or its row is all zero.
std::optional<ContextDomain> select_context(const CorrelationMatrix& matrix,
                                            std::string_view word);

/// Context with the most keyword hits over the whole log.
std::optional<ContextDomain> select_session_context(
    const MessageLog& log, std::span<const ContextDomain> contexts);

// Documents.
//
// Context configuration: `name<TAB>ontology_id<TAB>kw1,kw2,...` per line.
// Message log:           `sender<TAB>text` per line.
// Matrix:                header `word<TAB>ctx1<TAB>ctx2...`, then one row per
//                        word with percentages (a trailing '%' is accepted).
// All three skip blank lines and '#' comments.

std::vector<ContextDomain> load_contexts(std::istream& in);
std::vector<ContextDomain> load_contexts_file(const std::filesystem::path& path);

MessageLog load_message_log(std::istream& in);
MessageLog parse_message_log(std::string_view document);
MessageLog load_message_log_file(const std::filesystem::path& path);

CorrelationMatrix load_matrix(std::istream& in, std::vector<ContextDomain> contexts);
CorrelationMatrix load_matrix_file(const std::filesystem::path& path,
                                   std::vector<ContextDomain> contexts);
std::string render_matrix(const CorrelationMatrix& matrix);

const ContextDomain* find_context(std::span<const ContextDomain> contexts,
                                  std::string_view name);

}  // namespace judge
