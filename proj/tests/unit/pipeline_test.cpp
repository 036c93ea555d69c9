// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#include "judge/pipeline.hpp"

#include <gtest/gtest.h>

#include <random>

#include "judge/error.hpp"
#include "judge/morphology.hpp"
#include "support.hpp"

namespace judge {
namespace {

class PipelineTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    lexicon_ = new Lexicon(Lexicon::load_file(testing::data_path("lexicon/pt.tsv")));
    registry_ = new OntologyRegistry(
        OntologyRegistry::load_directory(testing::data_path("ontologies")));
    backend_ = new MockStatisticalMt(
        PhraseTable::load_file(testing::data_path("phrase_tables/pt-en.tsv")));
  }
  static void TearDownTestSuite() {
    delete lexicon_;
    delete registry_;
    delete backend_;
  }

  Session session(const std::optional<std::string>& ontology) {
    return create_session("pt", "en", std::nullopt, ontology, *registry_);
  }
  TranslationResult run(Session& s, std::string_view text) {
    return translate_message(s, "ana", text, *backend_, {*lexicon_, *registry_});
  }
  static const Decision* decision_for(const TranslationTrace& t, std::string_view word) {
    for (const auto& d : t.decisions)
      if (d.word == word) return &d;
    return nullptr;
  }

  static Lexicon* lexicon_;
  static OntologyRegistry* registry_;
  static MockStatisticalMt* backend_;
};

Lexicon* PipelineTest::lexicon_ = nullptr;
OntologyRegistry* PipelineTest::registry_ = nullptr;
MockStatisticalMt* PipelineTest::backend_ = nullptr;

TEST_F(PipelineTest, MusicSessionResolvesDrums) {
  auto s = session("music_ontology");
  auto r = run(s, "a minha bateria está ruim");
  EXPECT_EQ(r.trace.pre_mt_text, "a minha drums está ruim");
  EXPECT_EQ(r.final_text, "my drums is bad");
  const auto* d = decision_for(r.trace, "bateria");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->resolution_source, ResolutionSource::ontology);
  EXPECT_EQ(d->concept_iri, "http://purl.org/ontology/mo/mit#Drums");
  EXPECT_EQ(d->target_word, "drums");
  EXPECT_FALSE(d->skipped_reason);
  EXPECT_EQ(backend_->translate("a minha bateria está ruim", "pt", "en"), "my battery is bad");
}

TEST_F(PipelineTest, LocutionLeftToBackend) {
  auto s = session("music_ontology");
  auto r = run(s, "a guitarra estava ligada na bateria do carro");
  const auto* d = decision_for(r.trace, "bateria");
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->skipped_reason, SkipReason::locution);
  EXPECT_FALSE(d->target_word);
  EXPECT_NE(r.final_text.find("car battery"), std::string::npos) << r.final_text;
  EXPECT_EQ(decision_for(r.trace, "guitarra")->resolution_source, ResolutionSource::ontology);
  EXPECT_EQ(decision_for(r.trace, "carro")->skipped_reason, SkipReason::not_in_ontology);
}

TEST_F(PipelineTest, DaContractionMakesLocution) {
  auto s = session("music_ontology");
  auto r = run(s, "a bateria da banda não chegou");
  EXPECT_EQ(r.trace.tagged.tokens[2].normalized, "da");
  EXPECT_EQ(r.trace.tagged.tokens[2].pos, PosTag::preposition);
  EXPECT_EQ(decision_for(r.trace, "bateria")->skipped_reason, SkipReason::locution);
}

TEST_F(PipelineTest, TempLogBeatsOntologyUntilReset) {
  auto s = session("vehicle_ontology");
  std::vector<std::pair<std::string, std::string>> seed{{"bateria", "drums"}};
  seed_bindings(s, seed);
  const std::string msg = "ok, e a bateria estava completa?";

  auto second = run(s, msg);
  EXPECT_EQ(second.final_text, "ok, and the drums was complete?");
  EXPECT_EQ(decision_for(second.trace, "bateria")->resolution_source, ResolutionSource::temp_log);
  EXPECT_EQ(second.trace.iteration, 2u);

  auto third = run(s, msg);
  EXPECT_NE(third.final_text.find("drums"), std::string::npos);
  EXPECT_EQ(third.trace.iteration, 3u);

  auto fourth = run(s, msg);
  EXPECT_TRUE(fourth.trace.window_reset);
  EXPECT_EQ(fourth.trace.iteration, 1u);
  EXPECT_EQ(decision_for(fourth.trace, "bateria")->resolution_source, ResolutionSource::ontology);
  EXPECT_NE(fourth.final_text.find("battery"), std::string::npos) << fourth.final_text;
}

TEST_F(PipelineTest, OntologyResultIsRememberedForTheWindow) {
  auto s = session("music_ontology");
  run(s, "a bateria está desafinada");
  EXPECT_EQ(lookup_binding(s, "bateria"), "drums");
  auto r = run(s, "a bateria está ruim");
  EXPECT_EQ(decision_for(r.trace, "bateria")->resolution_source, ResolutionSource::temp_log);
}

TEST_F(PipelineTest, NoOntology) {
  auto s = session(std::nullopt);
  auto r = run(s, "a bateria está ruim");
  EXPECT_EQ(decision_for(r.trace, "bateria")->skipped_reason, SkipReason::no_ontology);
  EXPECT_EQ(r.final_text, "the battery is bad");
}

TEST_F(PipelineTest, ConceptWithoutTargetLabel) {
  OntologyRegistry reg;
  reg.add("x", ConceptStore::from_concepts({{"urn:x", {{"pt", "Bateria"}}, {}, {}}}));
  auto s = create_session("pt", "en", std::nullopt, "x", reg);
  auto r = translate_message(s, "a", "a bateria está ruim", *backend_, {*lexicon_, reg});
  const auto* d = decision_for(r.trace, "bateria");
  EXPECT_EQ(d->skipped_reason, SkipReason::not_in_ontology);
  EXPECT_EQ(d->concept_iri, "urn:x");
}

TEST_F(PipelineTest, EmptyMessage) {
  auto s = session("music_ontology");
  auto r = run(s, "   ");
  EXPECT_TRUE(r.trace.decisions.empty());
  EXPECT_EQ(r.final_text, "");
  EXPECT_EQ(s.history.size(), 1u);
}

TEST_F(PipelineTest, HistoryRecorded) {
  auto s = session("music_ontology");
  run(s, "a bateria está ruim");
  run(s, "o prato rachou");
  ASSERT_EQ(s.history.size(), 2u);
  EXPECT_EQ(s.history[1].seq, 1u);
  EXPECT_EQ(s.history[1].sender, "ana");
  EXPECT_EQ(s.history[1].original, "o prato rachou");
  EXPECT_EQ(s.history[1].translated, "the cymbal cracked");
  EXPECT_EQ(s.history[1].trace.final_text, s.history[1].translated);
}

class FailingBackend : public MtBackend {
 public:
  std::string name() const override { return "down"; }
  std::string translate(std::string_view, std::string_view, std::string_view) const override {
    throw std::runtime_error("backend unavailable");
  }
};

TEST_F(PipelineTest, BackendFailureLeavesSessionUntouched) {
  auto s = session("music_ontology");
  run(s, "o prato rachou");
  auto before = s;
  FailingBackend down;
  try {
    translate_message(s, "ana", "a bateria está ruim", down, {*lexicon_, *registry_});
    FAIL();
  } catch (const PipelineError& e) {
    EXPECT_EQ(e.trace().pre_mt_text, "a drums está ruim");
    EXPECT_TRUE(e.trace().final_text.empty());
  }
  EXPECT_EQ(s, before);
}

TEST_F(PipelineTest, RegistryMissIsConfigError) {
  auto s = session("music_ontology");
  OntologyRegistry empty;
  EXPECT_THROW(translate_message(s, "a", "a bateria", *backend_, {*lexicon_, empty}), ConfigError);
}

TEST_F(PipelineTest, DeterministicAcrossSessions) {
  const std::vector<std::string> script{"a bateria está ruim", "o banco está rasgado",
                                        "a vela está gasta", "o farol queimou",
                                        "ok, e a bateria estava completa?"};
  auto a = session("vehicle_ontology");
  auto b = session("vehicle_ontology");
  for (const auto& m : script) {
    auto ra = run(a, m);
    auto rb = run(b, m);
    EXPECT_EQ(ra, rb);
  }
}

TEST_F(PipelineTest, TempLogPrecedenceProperty) {
  // Whatever the ontology says, a binding in the window wins.
  std::mt19937 rng(47);
  const std::vector<std::string> words{"bateria", "vela", "banco", "rede", "farol"};
  const std::vector<std::string> ontologies{"music_ontology", "vehicle_ontology",
                                            "sports_ontology", "computer_ontology"};
  for (int i = 0; i < 100; ++i) {
    auto s = session(ontologies[rng() % ontologies.size()]);
    const auto& w = words[rng() % words.size()];
    std::string target = "sense" + std::to_string(i);
    std::vector<std::pair<std::string, std::string>> seed{{w, target}};
    seed_bindings(s, seed);
    auto r = run(s, "o " + w + " está ruim");
    const auto* d = decision_for(r.trace, w);
    ASSERT_NE(d, nullptr);
    EXPECT_EQ(d->resolution_source, ResolutionSource::temp_log);
    EXPECT_EQ(d->target_word, target);
    ASSERT_EQ(r.trace.replacements.size(), 1u);
    EXPECT_EQ(r.trace.replacements[0].substituted, target);
  }
}

}  // namespace
}  // namespace judge
