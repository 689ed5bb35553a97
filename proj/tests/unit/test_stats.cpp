#include <doctest.h>

#include <array>
#include <random>

#include "montee/stats.hpp"

#include "fixtures.hpp"

using namespace montee;
using fixtures::tok;

namespace {

ParsedDocument doc_with_types(const std::vector<std::string>& types) {
  ParsedDocument doc;
  doc.doc_id = "d";
  std::vector<DepNode> nodes;
  for (std::size_t i = 0; i < types.size(); ++i) {
    auto n = tok(static_cast<int>(i), "w", "w", "NNP");
    if (!types[i].empty()) n.entity = EntityRef{"e" + std::to_string(i), types[i]};
    nodes.push_back(std::move(n));
  }
  doc.sentences.push_back({"", DepGraph(std::move(nodes), {})});
  return doc;
}

RelationRecord rec(std::string tag = "", std::string trigger = "") {
  RelationRecord r;
  r.doc_id = "d";
  r.pred = "p";
  if (!tag.empty()) r.tag = tag;
  if (!trigger.empty()) r.trigger = trigger;
  return r;
}

}  // namespace

TEST_CASE("FIGER prefix matching respects path boundaries") {
  CHECK(figer_matches_prefix("government", "government"));
  CHECK(figer_matches_prefix("government/political_party", "government"));
  CHECK_FALSE(figer_matches_prefix("governmental", "government"));
  CHECK_FALSE(figer_matches_prefix("gov", "government"));
  CHECK(figer_matches_prefix("person/politician", "person/politician"));
  CHECK_FALSE(figer_matches_prefix("person/politician_aide", "person/politician"));
}

TEST_CASE("domain classification: strict fraction, inclusive count") {
  DomainFilterConfig cfg;
  cfg.type_prefixes = {"government", "person/politician"};
  cfg.min_fraction = 0.4;
  cfg.min_count = 2;

  // 3 of 5 mentions in-domain: 0.6 > 0.4 and 3 >= 2.
  CHECK(classify_domain(doc_with_types({"government", "government/agency",
                                        "person/politician", "location/city",
                                        "person/artist"}),
                        cfg));
  // Exactly 40% fails the strict comparison.
  CHECK_FALSE(classify_domain(doc_with_types({"government", "government",
                                              "location/city", "location/city",
                                              "person/artist"}),
                              cfg));
  // Fraction fine but only one mention: below min_count.
  CHECK_FALSE(classify_domain(doc_with_types({"government"}), cfg));
  // No entity mentions at all: never in-domain.
  CHECK_FALSE(classify_domain(doc_with_types({"", "", ""}), cfg));

  cfg.min_count = 1;
  CHECK(classify_domain(doc_with_types({"government"}), cfg));
}

TEST_CASE("domain classification is monotone in the prefix set") {
  auto doc = doc_with_types({"government", "location/city", "person/artist"});
  DomainFilterConfig narrow;
  narrow.type_prefixes = {"government"};
  narrow.min_fraction = 0.3;
  narrow.min_count = 1;
  auto wide = narrow;
  wide.type_prefixes.push_back("location");
  CHECK(classify_domain(doc, narrow));
  CHECK(classify_domain(doc, wide));  // more prefixes can only add mentions
}

TEST_CASE("tag distribution counts per category") {
  std::vector<RelationRecord> rels = {rec("MOD", "will"), rec(), rec(), rec()};
  auto dist = tag_distribution(rels);
  CHECK(dist.total == 4);
  CHECK(dist.untagged == 3);
  CHECK(dist.tagged() == 1);
  CHECK(dist.per_category[0] == 1);  // MOD

  auto text = dist.to_string();
  CHECK(text.find("Modal") != std::string::npos);
  CHECK(text.find("Negation") != std::string::npos);

  auto empty = tag_distribution(std::vector<RelationRecord>{});
  CHECK(empty.total == 0);
  CHECK(empty.tagged() == 0);
}

TEST_CASE("property: distribution matches a direct recount") {
  std::mt19937 rng(17);
  const char* tags[] = {"MOD", "ATT_SAY", "ATT_THINK", "COND", "COUNT", "LNEG", "NEG"};
  std::vector<RelationRecord> rels;
  std::array<long long, 7> expected{};
  long long untagged = 0;
  for (int i = 0; i < 500; ++i) {
    int t = static_cast<int>(rng() % 8);
    if (t == 7) {
      rels.push_back(rec());
      ++untagged;
    } else {
      rels.push_back(rec(tags[t]));
      ++expected[static_cast<std::size_t>(t)];
    }
  }
  auto dist = tag_distribution(rels);
  CHECK(dist.total == 500);
  CHECK(dist.untagged == untagged);
  CHECK(dist.per_category == expected);
}

TEST_CASE("trigger frequency ranks by count, ties lexicographically") {
  std::vector<RelationRecord> rels;
  for (int i = 0; i < 5; ++i) rels.push_back(rec("ATT_SAY", "say"));
  for (int i = 0; i < 3; ++i) rels.push_back(rec("MOD", "will"));
  for (int i = 0; i < 2; ++i) rels.push_back(rec("MOD", "may"));
  for (int i = 0; i < 2; ++i) rels.push_back(rec("MOD", "can"));
  rels.push_back(rec());  // untagged records contribute nothing

  auto top = trigger_frequency(rels, 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == std::pair<std::string, long long>{"say", 5});
  CHECK(top[1] == std::pair<std::string, long long>{"will", 3});
  CHECK(top[2] == std::pair<std::string, long long>{"can", 2});  // can < may

  // k larger than the distinct trigger count returns everything.
  CHECK(trigger_frequency(rels, 100).size() == 4);
  CHECK(trigger_frequency(rels, 0).empty());
}
