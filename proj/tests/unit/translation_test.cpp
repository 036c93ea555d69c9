// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/translation.hpp"

#include <gtest/gtest.h>

#include <random>

#include "judge/error.hpp"
#include "judge/lexicon.hpp"
#include "judge/morphology.hpp"
#include "support.hpp"

namespace judge {
namespace {

const PhraseTable& table() {
  static const auto t = PhraseTable::load_file(testing::data_path("phrase_tables/pt-en.tsv"));
  return t;
}

const Lexicon& lexicon() {
  static const auto l = Lexicon::load_file(testing::data_path("lexicon/pt.tsv"));
  return l;
}

std::string mt(std::string_view s) { return mock_translate(table(), s, "pt", "en"); }

TEST(PhraseTable, SortsByFrequencyThenText) {
  auto t = PhraseTable::parse("x\tb\t5\nx\ta\t5\nx\tc\t9\n");
  const auto* targets = t.find("x");
  ASSERT_NE(targets, nullptr);
  EXPECT_EQ((*targets)[0].phrase, "c");
  EXPECT_EQ((*targets)[1].phrase, "a");
  EXPECT_EQ((*targets)[2].phrase, "b");
}

TEST(PhraseTable, SumsDuplicatePairs) {
  auto t = PhraseTable::parse("x\ta\t5\nx\tb\t7\nX\ta\t3\n");
  EXPECT_EQ(t.best("x")->phrase, "a");
  EXPECT_EQ(t.best("x")->frequency, 8u);
}

TEST(PhraseTable, NormalizesSource) {
  auto t = PhraseTable::parse("Bateria  do   Carro\tcar battery\t1\n");
  EXPECT_NE(t.find("bateria do carro"), nullptr);
}

TEST(PhraseTable, RejectsBadLines) {
  EXPECT_THROW(PhraseTable::parse("x\ta\n"), LoadError);
  EXPECT_THROW(PhraseTable::parse("x\ta\t0\n"), LoadError);
  EXPECT_THROW(PhraseTable::parse("x\ta\t-3\n"), LoadError);
  EXPECT_THROW(PhraseTable::parse("x\ta\tmany\n"), LoadError);
  EXPECT_THROW(PhraseTable::parse("a b c d\tx\t1\n"), LoadError);
  EXPECT_THROW(PhraseTable::parse("\tx\t1\n"), LoadError);
}

TEST(PhraseTable, ShippedHomographsPreferFrequentSense) {
  EXPECT_EQ(table().best("banco")->phrase, "bank");
  EXPECT_EQ(table().best("bateria")->phrase, "battery");
  EXPECT_EQ(table().best("vela")->phrase, "candle");
}

TEST(MockTranslate, FrequentSenseWins) {
  EXPECT_EQ(mt("O banco está com problema."), "the bank has a problem.");
  EXPECT_EQ(mt("A bateria está com defeito."), "the battery is defective.");
  EXPECT_EQ(mt("A vela está ruim."), "the candle is bad.");
}

TEST(MockTranslate, LongestMatchFirst) {
  EXPECT_EQ(mt("a bateria do carro"), "the car battery");
  EXPECT_EQ(mt("a minha bateria está ruim"), "my battery is bad");
}

TEST(MockTranslate, PhraseDoesNotCrossPunctuation) {
  EXPECT_EQ(mt("bateria, do carro"), "battery, of the car");
  EXPECT_EQ(mt("bateria do carro!"), "car battery!");
}

TEST(MockTranslate, UnknownTokensPassThroughLowercased) {
  EXPECT_EQ(mt("Xyzzy drums"), "xyzzy drums");
  EXPECT_EQ(mt(""), "");
}

TEST(MockTranslate, Deterministic) {
  MockStatisticalMt backend(table());
  EXPECT_EQ(backend.translate("a vela está ruim", "pt", "en"),
            backend.translate("a vela está ruim", "pt", "en"));
  EXPECT_EQ(backend.name(), "mock-smt");
}

TEST(Replace, SwapsOneToken) {
  auto s = analyze("a minha bateria está ruim.", lexicon());
  auto out = replace(s, 2, "drums");
  EXPECT_EQ(out.text, "a minha drums está ruim.");
  EXPECT_EQ(out.replacement.original, "bateria");
  EXPECT_EQ(out.replacement.substituted, "drums");
  EXPECT_EQ(out.replacement.source, ResolutionSource::ontology);
  EXPECT_EQ(out.sentence.tokens[2].normalized, "drums");
}

TEST(Replace, KeepsPunctuation) {
  auto s = analyze("ok, e a bateria estava completa?", lexicon());
  EXPECT_EQ(replace(s, 3, "drums", ResolutionSource::temp_log).text,
            "ok, e a drums estava completa?");
}

TEST(Replace, Contract) {
  auto s = analyze("a bateria", lexicon());
  EXPECT_THROW(replace(s, 2, "x"), ContractViolation);
  EXPECT_THROW(replace(s, 1, ""), ContractViolation);
}

TEST(ReplaceProperty, PreservesTokenCountAndOthers) {
  std::mt19937 rng(41);
  const std::vector<std::string> words{"a", "bateria", "do", "carro", "está", "ruim", "vela"};
  const std::vector<std::string> puncts{"", "", ",", "?"};
  const std::vector<std::string> targets{"drums", "spark plug", "steering wheel", "x"};
  for (int i = 0; i < 500; ++i) {
    std::string text;
    int n = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < n; ++k)
      text += (k ? " " : "") + words[rng() % words.size()] + puncts[rng() % puncts.size()];
    auto s = analyze(text, lexicon());
    auto idx = rng() % s.tokens.size();
    auto out = replace(s, idx, targets[rng() % targets.size()]);
    ASSERT_EQ(out.sentence.tokens.size(), s.tokens.size());
    for (std::size_t k = 0; k < s.tokens.size(); ++k) {
      EXPECT_EQ(out.sentence.tokens[k].trailing_punct, s.tokens[k].trailing_punct);
      if (k != idx) {
        EXPECT_EQ(out.sentence.tokens[k], s.tokens[k]);
      }
    }
  }
}

TEST(ResolutionSource, Names) {
  EXPECT_EQ(to_string(ResolutionSource::temp_log), "temp_log");
  EXPECT_EQ(parse_resolution_source("ontology"), ResolutionSource::ontology);
  EXPECT_FALSE(parse_resolution_source("x"));
}

}  // namespace
}  // namespace judge
