#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "montee/depgraph.hpp"
#include "montee/lexicon.hpp"
#include "montee/relation.hpp"

namespace montee {

// Final tag categories in precedence order: earlier wins.
enum class TagCategory { Mod, AttSay, AttThink, Cond, Count, Lneg, Neg };

std::string to_string(TagCategory c);
std::optional<TagCategory> tag_category_from_string(const std::string& s);
TagCategory tag_category_of(LexCategory c);

enum class TriggerSource { Lexicon, Counterfactual, NegFunctionWord };

struct TriggerNode {
  int head = -1;        // syntactic head of the trigger span
  int span_start = -1;  // first token of the matched span
  int span_len = 1;
  TriggerSource source = TriggerSource::Lexicon;
  TagCategory category = TagCategory::Mod;
  std::optional<int> strength;
  std::optional<std::string> subcategory;
  std::string phrase;  // trigger lemma phrase, e.g. "as long as"
};

struct ModalTag {
  TagCategory category = TagCategory::Mod;
  int trigger_node = -1;
  std::optional<int> strength;
  std::optional<std::string> subcategory;
  std::string trigger_phrase;
};

struct TaggedRelation {
  EventRelation rel;
  std::optional<ModalTag> tag;
};

// Lexicon matches (longest match, scanning left to right), counterfactual
// nodes, and the closed-class negation function words.
std::vector<TriggerNode> find_triggers(const DepGraph& g, const TriggerLexicon& lex);

// A relation collects the categories of every trigger that reaches its
// predicate head and is not part of its own predicate chain; the final tag
// is chosen by precedence. Stripped variants are tagged independently.
std::vector<TaggedRelation> tag_events(const DepGraph& g,
                                       std::span<const EventRelation> events,
                                       std::span<const TriggerNode> triggers);

// Earliest category in the precedence list; throws ContractError on empty.
TagCategory tag_precedence(std::span<const TagCategory> categories);

// LNEG/NEG -> 0 (didn't happen); absent -> 2 (happened); all others -> 1.
int map_certainty(std::optional<TagCategory> tag);

}  // namespace montee
