// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/context.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "judge/error.hpp"
#include "support.hpp"

namespace judge {
namespace {

const std::vector<ContextDomain>& contexts() {
  static const auto c = load_contexts_file(testing::data_path("contexts.tsv"));
  return c;
}

const std::vector<std::string> kHomographs{"bateria", "vela", "banco", "bolsa", "rede"};

// Independent oracle: naive whitespace split, punctuation stripped.
std::vector<std::string> naive_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string w;
  while (in >> w) {
    while (!w.empty() && std::string(".,!?;:").find(w.back()) != std::string::npos) w.pop_back();
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) {
      return c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

struct Counts {
  int containing = 0;
  int hits = 0;
};

Counts brute_force(const MessageLog& log, const std::string& word, const ContextDomain& ctx) {
  Counts c;
  for (const auto& m : log) {
    auto toks = naive_tokens(m.text);
    if (std::find(toks.begin(), toks.end(), word) == toks.end()) continue;
    ++c.containing;
    for (const auto& t : toks)
      if (ctx.keywords.count(t)) {
        ++c.hits;
        break;
      }
  }
  return c;
}

TEST(Contexts, ShippedConfiguration) {
  ASSERT_EQ(contexts().size(), 5u);
  EXPECT_EQ(contexts()[0].name, "Music");
  EXPECT_EQ(contexts()[0].ontology_id, "music_ontology");
  EXPECT_TRUE(contexts()[0].keywords.count("guitarra"));
  EXPECT_NE(find_context(contexts(), "Vehicles"), nullptr);
  EXPECT_EQ(find_context(contexts(), "vehicles"), nullptr);
}

TEST(Contexts, RejectsMalformed) {
  std::istringstream dup("A\tx\tk\nA\ty\tk\n");
  EXPECT_THROW(load_contexts(dup), LoadError);
  std::istringstream empty_kw("A\tx\t\n");
  EXPECT_THROW(load_contexts(empty_kw), LoadError);
  std::istringstream short_line("A\tx\n");
  EXPECT_THROW(load_contexts(short_line), LoadError);
}

TEST(MessageLogs, Parse) {
  auto log = parse_message_log("# c\nana\toi tudo bem\n\nbruno\tsim\n");
  ASSERT_EQ(log.size(), 2u);
  EXPECT_EQ(log[1].sender, "bruno");
  EXPECT_THROW(parse_message_log("sem separador\n"), LoadError);
}

TEST(BuildMatrix, ReferenceLogReproducesReferenceMatrix) {
  auto log = load_message_log_file(testing::data_path("logs/reference_log.tsv"));
  auto built = build_matrix(log, contexts(), kHomographs);
  auto fixture = load_matrix_file(testing::data_path("matrix/reference.tsv"), contexts());
  for (const auto& w : kHomographs)
    for (const auto& c : contexts())
      EXPECT_DOUBLE_EQ(built.cell(w, c.name), fixture.cell(w, c.name)) << w << "/" << c.name;
}

TEST(BuildMatrix, AgreesWithBruteForceCount) {
  auto log = load_message_log_file(testing::data_path("logs/reference_log.tsv"));
  auto built = build_matrix(log, contexts(), kHomographs);
  for (const auto& w : kHomographs)
    for (const auto& c : contexts()) {
      auto n = brute_force(log, w, c);
      EXPECT_DOUBLE_EQ(built.cell(w, c.name), 100.0 * n.hits / std::max(1, n.containing));
    }
  auto bateria_music = brute_force(log, "bateria", contexts()[0]);
  EXPECT_EQ(bateria_music.hits, 39);
  EXPECT_EQ(bateria_music.containing, 50);
  EXPECT_DOUBLE_EQ(built.cell("bateria", "Music"), 78.0);
}

TEST(BuildMatrix, AbsentHomographIsZero) {
  auto built = build_matrix({{"a", "o show foi bom"}}, contexts(), std::vector<std::string>{"vela"});
  for (const auto& c : contexts()) EXPECT_EQ(built.cell("vela", c.name), 0.0);
  EXPECT_FALSE(select_context(built, "vela"));
}

TEST(BuildMatrix, SingleMessage) {
  auto built = build_matrix({{"a", "a vela do barco"}}, contexts(), std::vector<std::string>{"vela"});
  EXPECT_EQ(built.cell("vela", "Sports"), 100.0);
}

TEST(BuildMatrix, WholeTokenMatching) {
  // "carros" is not the keyword "carro"; "Carro," is.
  auto built = build_matrix({{"a", "bateria carros"}, {"b", "bateria Carro,"}}, contexts(),
                            std::vector<std::string>{"bateria"});
  EXPECT_EQ(built.cell("bateria", "Vehicles"), 50.0);
}

TEST(BuildMatrix, Preconditions) {
  std::vector<ContextDomain> none;
  EXPECT_THROW(build_matrix({}, none, kHomographs), ContractViolation);
  EXPECT_THROW(build_matrix({}, contexts(), std::vector<std::string>{}), ContractViolation);
}

TEST(SelectContext, ReferenceMatrix) {
  auto m = load_matrix_file(testing::data_path("matrix/reference.tsv"), contexts());
  EXPECT_EQ(select_context(m, "bateria")->name, "Music");
  EXPECT_EQ(select_context(m, "vela")->name, "Sports");
  EXPECT_EQ(select_context(m, "rede")->name, "Electronic/Computer");
  EXPECT_EQ(select_context(m, "bolsa")->name, "Financial");
  EXPECT_EQ(select_context(m, "banco")->name, "Electronic/Computer");
  EXPECT_FALSE(select_context(m, "guitarra"));
}

TEST(SelectContext, TieGoesToSmallerName) {
  CorrelationMatrix m(contexts());
  m.set("x", "Sports", 50);
  m.set("x", "Music", 50);
  EXPECT_EQ(select_context(m, "x")->name, "Music");
}

TEST(CorrelationMatrix, SetValidates) {
  CorrelationMatrix m(contexts());
  EXPECT_THROW(m.set("x", "Nope", 1), ContractViolation);
  EXPECT_THROW(m.set("x", "Music", 101), ContractViolation);
  EXPECT_THROW(m.set("x", "Music", -1), ContractViolation);
}

TEST(LoadMatrix, RejectsBadDocuments) {
  std::istringstream unknown("word\tNope\nx\t1\n");
  EXPECT_THROW(load_matrix(unknown, contexts()), LoadError);
  std::istringstream bad("word\tMusic\nx\tabc\n");
  EXPECT_THROW(load_matrix(bad, contexts()), LoadError);
  std::istringstream width("word\tMusic\nx\t1\t2\n");
  EXPECT_THROW(load_matrix(width, contexts()), LoadError);
}

TEST(LoadMatrix, RenderRoundTrip) {
  auto m = load_matrix_file(testing::data_path("matrix/reference.tsv"), contexts());
  std::istringstream in(render_matrix(m));
  EXPECT_EQ(load_matrix(in, contexts()), m);
}

TEST(SessionContext, MusicChatter) {
  auto log = load_message_log_file(testing::data_path("logs/music_chat.tsv"));
  EXPECT_EQ(select_session_context(log, contexts())->name, "Music");
}

TEST(SessionContext, CountsHits) {
  auto log = load_message_log_file(testing::data_path("logs/vehicles_vs_music.tsv"));
  int vehicles = 0, music = 0;
  for (const auto& m : log)
    for (const auto& t : naive_tokens(m.text)) {
      vehicles += find_context(contexts(), "Vehicles")->keywords.count(t);
      music += find_context(contexts(), "Music")->keywords.count(t);
    }
  EXPECT_EQ(vehicles, 3);
  EXPECT_EQ(music, 1);
  EXPECT_EQ(select_session_context(log, contexts())->name, "Vehicles");
}

TEST(SessionContext, EmptyLog) { EXPECT_FALSE(select_session_context({}, contexts())); }

// Properties.

MessageLog random_log(std::mt19937& rng) {
  static const std::vector<std::string> words{"bateria", "vela", "banco", "guitarra", "carro",
                                              "barco", "dinheiro", "oi", "hoje", "computador"};
  std::uniform_int_distribution<std::size_t> n_msgs(1, 30), n_words(1, 6),
      pick(0, words.size() - 1);
  MessageLog log;
  for (std::size_t i = 0, n = n_msgs(rng); i < n; ++i) {
    std::string text;
    for (std::size_t j = 0, k = n_words(rng); j < k; ++j) text += (j ? " " : "") + words[pick(rng)];
    log.push_back({"s", text});
  }
  return log;
}

TEST(MatrixProperty, ArgmaxInvariantUnderDuplication) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto log = random_log(rng);
    MessageLog dup;
    int k = 2 + i % 4;
    for (int r = 0; r < k; ++r) dup.insert(dup.end(), log.begin(), log.end());
    auto a = build_matrix(log, contexts(), kHomographs);
    auto b = build_matrix(dup, contexts(), kHomographs);
    for (const auto& w : kHomographs) EXPECT_EQ(select_context(a, w), select_context(b, w));
  }
}

TEST(MatrixProperty, OrderInsensitive) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto log = random_log(rng);
    auto shuffled = log;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(build_matrix(log, contexts(), kHomographs),
              build_matrix(shuffled, contexts(), kHomographs));
  }
}

TEST(MatrixProperty, ArgmaxAndBounds) {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto m = build_matrix(random_log(rng), contexts(), kHomographs);
    for (const auto& w : kHomographs) {
      for (const auto& c : contexts()) {
        EXPECT_GE(m.cell(w, c.name), 0.0);
        EXPECT_LE(m.cell(w, c.name), 100.0);
      }
      auto best = select_context(m, w);
      if (!best) continue;
      for (const auto& c : contexts()) EXPECT_GE(m.cell(w, best->name), m.cell(w, c.name));
    }
  }
}

}  // namespace
}  // namespace judge
