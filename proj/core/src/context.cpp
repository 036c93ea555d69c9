// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/context.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "judge/error.hpp"
#include "judge/morphology.hpp"
#include "judge/text.hpp"

namespace judge {
namespace {

std::set<std::string> token_set(std::string_view message) {
  std::set<std::string> out;
  for (auto& token : tokenize(message)) out.insert(std::move(token.normalized));
  return out;
}

bool has_keyword(const std::set<std::string>& tokens, const ContextDomain& context) {
  for (const auto& kw : context.keywords)
    if (tokens.count(kw)) return true;
  return false;
}

// Shared line reader: strips CR, skips blanks and comments.
template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    if (!text::is_valid_utf8(line)) throw LoadError("invalid UTF-8", line_no);
    fn(std::string_view(line), line_no);
  }
}

std::ifstream open(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + std::string(what) + " " + path.string());
  return in;
}

std::string format_percent(double v) {
  std::ostringstream os;
  if (std::abs(v - std::round(v)) < 1e-9)
    os << static_cast<long long>(std::llround(v));
  else
    os << v;
  return os.str();
}

}  // namespace

CorrelationMatrix::CorrelationMatrix(std::vector<ContextDomain> contexts)
    : contexts_(std::move(contexts)) {}

void CorrelationMatrix::set(std::string_view word, std::string_view context,
                            double percent) {
  if (!find_context(context))
    throw ContractViolation("unknown context '" + std::string(context) + "'");
  if (!(percent >= 0.0 && percent <= 100.0))
    throw ContractViolation("cell value out of [0,100]");
  cells_[text::to_lower(word)].insert_or_assign(std::string(context), percent);
}

double CorrelationMatrix::cell(std::string_view word, std::string_view context) const {
  auto row = cells_.find(text::to_lower(word));
  if (row == cells_.end()) return 0.0;
  auto it = row->second.find(context);
  return it == row->second.end() ? 0.0 : it->second;
}

bool CorrelationMatrix::has_word(std::string_view word) const {
  return cells_.find(text::to_lower(word)) != cells_.end();
}

std::vector<std::string> CorrelationMatrix::words() const {
  std::vector<std::string> out;
  for (const auto& [word, row] : cells_) out.push_back(word);
  return out;
}

const ContextDomain* CorrelationMatrix::find_context(std::string_view name) const {
  return judge::find_context(contexts_, name);
}

const ContextDomain* find_context(std::span<const ContextDomain> contexts,
                                  std::string_view name) {
  for (const auto& c : contexts)
    if (c.name == name) return &c;
  return nullptr;
}

CorrelationMatrix build_matrix(const MessageLog& log,
                               std::span<const ContextDomain> contexts,
                               std::span<const std::string> homographs) {
  if (contexts.empty()) throw ContractViolation("build_matrix: no contexts");
  if (homographs.empty()) throw ContractViolation("build_matrix: no homographs");

  std::vector<std::set<std::string>> messages;
  messages.reserve(log.size());
  for (const auto& m : log) messages.push_back(token_set(m.text));

  CorrelationMatrix matrix({contexts.begin(), contexts.end()});
  for (const auto& raw : homographs) {
    auto word = text::to_lower(raw);
    std::size_t containing = 0;
    std::vector<std::size_t> hits(contexts.size(), 0);
    for (const auto& tokens : messages) {
      if (!tokens.count(word)) continue;
      ++containing;
      for (std::size_t c = 0; c < contexts.size(); ++c)
        if (has_keyword(tokens, contexts[c])) ++hits[c];
    }
    for (std::size_t c = 0; c < contexts.size(); ++c) {
      double pct = 100.0 * static_cast<double>(hits[c]) /
                   static_cast<double>(std::max<std::size_t>(1, containing));
      matrix.set(word, contexts[c].name, pct);
    }
  }
  return matrix;
}

std::optional<ContextDomain> select_context(const CorrelationMatrix& matrix,
                                            std::string_view word) {
  const ContextDomain* best = nullptr;
  double best_value = 0.0;
  for (const auto& c : matrix.contexts()) {
    double v = matrix.cell(word, c.name);
    if (v <= 0.0) continue;
    if (!best || v > best_value || (v == best_value && c.name < best->name)) {
      best = &c;
      best_value = v;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

std::optional<ContextDomain> select_session_context(
    const MessageLog& log, std::span<const ContextDomain> contexts) {
  if (contexts.empty()) throw ContractViolation("select_session_context: no contexts");
  std::vector<std::size_t> hits(contexts.size(), 0);
  for (const auto& m : log) {
    for (const auto& token : tokenize(m.text))
      for (std::size_t c = 0; c < contexts.size(); ++c)
        if (contexts[c].keywords.count(token.normalized)) ++hits[c];
  }
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    if (hits[c] == 0) continue;
    if (!best || hits[c] > hits[*best] ||
        (hits[c] == hits[*best] && contexts[c].name < contexts[*best].name))
      best = c;
  }
  if (!best) return std::nullopt;
  return contexts[*best];
}

std::vector<ContextDomain> load_contexts(std::istream& in) {
  std::vector<ContextDomain> out;
  for_each_line(in, [&](std::string_view line, std::size_t line_no) {
    auto fields = text::split(line, '\t');
    if (fields.size() != 3)
      throw LoadError("expected name<TAB>ontology_id<TAB>keywords", line_no);
    ContextDomain c;
    c.name = std::string(text::trim(fields[0]));
    c.ontology_id = std::string(text::trim(fields[1]));
    for (auto kw : text::split(fields[2], ',')) {
      auto k = text::to_lower(text::trim(kw));
      if (!k.empty()) c.keywords.insert(std::move(k));
    }
    if (c.name.empty()) throw LoadError("empty context name", line_no);
    if (c.keywords.empty()) throw LoadError("context '" + c.name + "' has no keywords", line_no);
    if (find_context(out, c.name))
      throw LoadError("duplicate context '" + c.name + "'", line_no);
    out.push_back(std::move(c));
  });
  return out;
}

std::vector<ContextDomain> load_contexts_file(const std::filesystem::path& path) {
  auto in = open(path, "context configuration");
  return load_contexts(in);
}

MessageLog load_message_log(std::istream& in) {
  MessageLog log;
  for_each_line(in, [&](std::string_view line, std::size_t line_no) {
    auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw LoadError("expected sender<TAB>text", line_no);
    log.push_back({std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))});
  });
  return log;
}

MessageLog parse_message_log(std::string_view document) {
  std::istringstream in{std::string(document)};
  return load_message_log(in);
}

MessageLog load_message_log_file(const std::filesystem::path& path) {
  auto in = open(path, "message log");
  return load_message_log(in);
}

CorrelationMatrix load_matrix(std::istream& in, std::vector<ContextDomain> contexts) {
  CorrelationMatrix matrix(std::move(contexts));
  std::vector<std::string> columns;
  for_each_line(in, [&](std::string_view line, std::size_t line_no) {
    auto fields = text::split(line, '\t');
    if (columns.empty()) {
      if (fields.size() < 2) throw LoadError("matrix header needs contexts", line_no);
      for (std::size_t i = 1; i < fields.size(); ++i) {
        std::string name(text::trim(fields[i]));
        if (!matrix.find_context(name))
          throw LoadError("unknown context '" + name + "' in matrix header", line_no);
        columns.push_back(std::move(name));
      }
      return;
    }
    if (fields.size() != columns.size() + 1)
      throw LoadError("expected " + std::to_string(columns.size() + 1) + " fields",
                      line_no);
    auto word = text::to_lower(text::trim(fields[0]));
    if (word.empty()) throw LoadError("empty word", line_no);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      auto raw = text::trim(fields[i + 1]);
      if (!raw.empty() && raw.back() == '%') raw.remove_suffix(1);
      double v = 0;
      auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
      if (ec != std::errc{} || ptr != raw.data() + raw.size() || v < 0 || v > 100)
        throw LoadError("bad percentage '" + std::string(fields[i + 1]) + "'", line_no);
      matrix.set(word, columns[i], v);
    }
  });
  return matrix;
}

CorrelationMatrix load_matrix_file(const std::filesystem::path& path,
                                   std::vector<ContextDomain> contexts) {
  auto in = open(path, "matrix");
  return load_matrix(in, std::move(contexts));
}

std::string render_matrix(const CorrelationMatrix& matrix) {
  std::string out = "word";
  for (const auto& c : matrix.contexts()) out += "\t" + c.name;
  out += '\n';
  for (const auto& word : matrix.words()) {
    out += word;
    for (const auto& c : matrix.contexts())
      out += "\t" + format_percent(matrix.cell(word, c.name));
    out += '\n';
  }
  return out;
}

}  // namespace judge
