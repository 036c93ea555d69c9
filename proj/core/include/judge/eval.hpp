// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "judge/context.hpp"
#include "judge/lexicon.hpp"
#include "judge/skos.hpp"
#include "judge/translation.hpp"

namespace judge::eval {

struct EvalCase {
  std::string source_sentence;
  std::string homograph;
  std::string context_name;
  std::string expected_target;
  std::optional<std::string> forbidden_target;

  bool operator==(const EvalCase&) const = default;
};

/// `source<TAB>homograph<TAB>context<TAB>expected[<TAB>forbidden]` per line;
/// '#' comments and blank lines skipped. Throws LoadError when the
/// homograph is not a token of the sentence.
std::vector<EvalCase> load_corpus(std::istream& in);
std::vector<EvalCase> load_corpus_file(const std::filesystem::path& path);

/// `phrase` occurs in `output` as a run of whole tokens (case-insensitive,
/// punctuation ignored).
bool contains_phrase(std::string_view output, std::string_view phrase);

/// Expected sense present and, if set, the forbidden sense absent.
bool semantic_correctness(std::string_view output, const EvalCase& c);

/// A system under test: the backend alone, or the backend behind the
/// disambiguation pipeline.
struct Variant {
  std::string name;
  const MtBackend* backend = nullptr;
  bool use_judge = false;
};

struct Cell {
  std::size_t correct = 0;
  std::size_t total = 0;
  double fraction() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  }
  bool operator==(const Cell&) const = default;
};

struct CaseOutcome {
  std::string variant;
  std::size_t case_index = 0;
  std::string output;
  bool correct = false;
};

struct EvalReport {
  std::vector<std::string> variants;  // row order
  std::vector<std::string> contexts;  // column order
  std::map<std::pair<std::string, std::string>, Cell> cells;  // (variant, context)
  std::map<std::string, std::size_t> counts;                  // cases per context
  std::vector<CaseOutcome> outcomes;

  const Cell* cell(std::string_view variant, std::string_view context) const;
  std::string render_table() const;
  nlohmann::json to_json() const;
};

struct EvalResources {
  const Tagger& tagger;
  const OntologyRegistry& ontologies;
  std::span<const ContextDomain> contexts;
};

/// Every case runs in a fresh session bound to its context's ontology.
/// Columns follow the order contexts first appear in the corpus. Throws
/// ConfigError listing every case whose context or ontology cannot be
/// resolved.
EvalReport run_eval(std::span<const EvalCase> corpus, std::span<const Variant> variants,
                    const EvalResources& resources);

}  // namespace judge::eval
