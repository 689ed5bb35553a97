#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "montee/errors.hpp"
#include "montee/lexicon.hpp"

#include "fixtures.hpp"

using namespace montee;

namespace {

TriggerLexicon from_string(const std::string& tsv) {
  std::istringstream in(tsv);
  return TriggerLexicon::parse(in, "<test>");
}

}  // namespace

TEST_CASE("starter lexicon loads with expected shape") {
  auto lex = TriggerLexicon::load(fixtures::fixture_path("lexicon_starter.tsv"));
  CHECK(lex.size() == 7);

  auto report = lex.validate();
  CHECK(report.ok());
  CHECK(report.entry_count == 7);
  CHECK(report.per_category.at("MOD") == 4);
  CHECK(report.per_category.at("COND") == 1);
  CHECK(report.per_category.at("ATT_SAY") == 1);
  CHECK(report.per_category.at("ATT_THINK") == 1);
}

TEST_CASE("strength 0 entries act as lexical negation but keep their category") {
  auto lex = TriggerLexicon::load(fixtures::fixture_path("lexicon_starter.tsv"));
  const LexiconEntry* impossible = nullptr;
  for (const auto& e : lex.entries()) {
    if (e.phrase_string() == "impossible") impossible = &e;
  }
  REQUIRE(impossible != nullptr);
  CHECK(impossible->category == LexCategory::Mod);
  CHECK(impossible->effective_category() == LexCategory::Lneg);
}

TEST_CASE("multi-token lookup prefers the longest match") {
  auto lex = from_string(
      "as\tMOD\tRB\t2\n"
      "as long as\tCOND\tRB\t2\n");
  std::vector<std::string> lemmas = {"as", "long", "as", "they", "protest"};
  std::vector<std::string> pos = {"RB", "RB", "RB", "PRP", "VBP"};

  auto hit = lex.match_at(lemmas, pos, 0);
  REQUIRE(hit.has_value());
  CHECK(hit->second == 3);
  CHECK(hit->first->category == LexCategory::Cond);

  // The bare "as" still matches where the long phrase cannot.
  auto short_hit = lex.match_at(lemmas, pos, 2);
  REQUIRE(short_hit.has_value());
  CHECK(short_hit->second == 1);
  CHECK(short_hit->first->category == LexCategory::Mod);

  CHECK_FALSE(lex.match_at(lemmas, pos, 3).has_value());
}

TEST_CASE("POS constraint is a prefix on the first token") {
  auto lex = from_string("concede\tATT_SAY\tVB\t4\n");
  std::vector<std::string> lemmas = {"concede"};

  for (const std::string p : {"VB", "VBD", "VBZ", "VBN"}) {
    std::vector<std::string> pos = {p};
    CHECK(lex.match_at(lemmas, pos, 0).has_value());
  }
  for (const std::string p : {"NN", "MD", "JJ", "V"}) {
    std::vector<std::string> pos = {p};
    CHECK_FALSE(lex.match_at(lemmas, pos, 0).has_value());
  }
}

TEST_CASE("wildcard POS matches everything, exact POS wins ties") {
  auto lex = from_string(
      "fail\tMOD\t*\t2\n"
      "fail\tLNEG\tVB\t1\n");
  std::vector<std::string> lemmas = {"fail"};

  std::vector<std::string> verb = {"VBD"};
  auto hit = lex.match_at(lemmas, verb, 0);
  REQUIRE(hit.has_value());
  CHECK(hit->first->category == LexCategory::Lneg);

  std::vector<std::string> noun = {"NN"};
  auto noun_hit = lex.match_at(lemmas, noun, 0);
  REQUIRE(noun_hit.has_value());
  CHECK(noun_hit->first->category == LexCategory::Mod);
}

TEST_CASE("comments, blank lines and optional columns") {
  auto lex = from_string(
      "# header comment\n"
      "\n"
      "doubt\tATT_THINK\tVB\n"
      "should\tMOD\tMD\t3\tdeontic\n");
  CHECK(lex.size() == 2);
  const auto& doubt = lex.entries()[0];
  CHECK_FALSE(doubt.strength.has_value());
  const auto& should = lex.entries()[1];
  CHECK(should.strength == 3);
  CHECK(should.subcategory == "deontic");
}

TEST_CASE("malformed rows raise DataError with the line number") {
  CHECK_THROWS_AS(from_string("justone\n"), DataError);
  CHECK_THROWS_AS(from_string("say\tVERBISH\tVB\n"), DataError);
  CHECK_THROWS_AS(from_string("say\tATT_SAY\tVB\tx\n"), DataError);
  CHECK_THROWS_AS(from_string("say\tATT_SAY\tVB\t9\n"), DataError);

  try {
    from_string("ok\tMOD\tMD\t2\nsay\tATT_SAY\tVB\t9\n");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("duplicate rows load but fail validation") {
  auto lex = from_string(
      "say\tATT_SAY\tVB\t4\n"
      "say\tATT_SAY\tVB\t3\n");
  CHECK(lex.size() == 2);
  auto report = lex.validate();
  CHECK_FALSE(report.ok());
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors[0].find("say") != std::string::npos);
}

TEST_CASE("validation warns on strength/category mismatches") {
  auto report = from_string("concede\tATT_SAY\tVB\t1\n").validate();
  CHECK(report.ok());
  CHECK(report.warnings.size() == 1);

  // Low strength on MOD is the modal scale itself ("impossible" = 0), and on
  // LNEG it is redundant but consistent: neither warns.
  CHECK(from_string("impossible\tMOD\tJJ\t0\n").validate().warnings.empty());
  CHECK(from_string("fail\tLNEG\tVB\t1\n").validate().warnings.empty());
}

TEST_CASE("property: matches always satisfy the POS constraint") {
  auto lex = TriggerLexicon::load(fixtures::fixture_path("lex.tsv"));
  std::mt19937 rng(7);
  std::vector<std::string> vocab = {"say", "will", "have", "to", "fail",
                                    "as", "long", "if", "dog", "run"};
  std::vector<std::string> tags = {"VB", "VBD", "MD", "NN", "IN", "RB", "TO", "JJ"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> lemmas, pos;
    int len = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) {
      lemmas.push_back(vocab[rng() % vocab.size()]);
      pos.push_back(tags[rng() % tags.size()]);
    }
    for (std::size_t i = 0; i < lemmas.size(); ++i) {
      auto hit = lex.match_at(lemmas, pos, i);
      if (!hit) continue;
      const auto& entry = *hit->first;
      CHECK(entry.pos_matches(pos[i]));
      // Matched span reproduces the entry phrase.
      REQUIRE(i + hit->second <= lemmas.size());
      for (int k = 0; k < hit->second; ++k) {
        CHECK(entry.lemma_phrase[static_cast<std::size_t>(k)] == lemmas[i + k]);
      }
      // No longer entry also matches here.
      for (const auto& other : lex.entries()) {
        if (static_cast<int>(other.lemma_phrase.size()) <= hit->second) continue;
        if (!other.pos_matches(pos[i])) continue;
        bool covers = i + other.lemma_phrase.size() <= lemmas.size();
        for (std::size_t k = 0; covers && k < other.lemma_phrase.size(); ++k) {
          covers = other.lemma_phrase[k] == lemmas[i + k];
        }
        CHECK_FALSE(covers);
      }
    }
  }
}

TEST_CASE("loading the same file twice is equivalent") {
  auto a = TriggerLexicon::load(fixtures::fixture_path("lex.tsv"));
  auto b = TriggerLexicon::load(fixtures::fixture_path("lex.tsv"));
  CHECK(a.size() == b.size());
  std::vector<std::string> lemmas = {"have", "to", "say", "if"};
  std::vector<std::string> pos = {"VB", "TO", "VB", "IN"};
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    auto ha = a.match_at(lemmas, pos, i);
    auto hb = b.match_at(lemmas, pos, i);
    CHECK(ha.has_value() == hb.has_value());
    if (ha && hb) {
      CHECK(ha->second == hb->second);
      CHECK(ha->first->phrase_string() == hb->first->phrase_string());
    }
  }
}
