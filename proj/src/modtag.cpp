#include "montee/modtag.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "montee/errors.hpp"
#include "montee/relex.hpp"

namespace montee {

namespace {

// Closed-class negation function words; fixed, not lexicon entries.
const std::set<std::string> kNegFunctionWords = {"not",  "no",   "never", "neither",
                                                 "nor",  "none", "without"};

constexpr std::array<TagCategory, 7> kPrecedence = {
    TagCategory::Mod,  TagCategory::AttSay, TagCategory::AttThink, TagCategory::Cond,
    TagCategory::Count, TagCategory::Lneg,  TagCategory::Neg};

// Syntactic head of a multi-token trigger span: the node with an edge out of
// the span; falls back to the first token.
int span_head(const DepGraph& g, int start, int len) {
  for (int i = start; i < start + len; ++i) {
    for (auto [d, s] : g.out(i)) {
      if (d < start || d >= start + len) return i;
    }
  }
  return start;
}

}  // namespace

std::string to_string(TagCategory c) {
  switch (c) {
    case TagCategory::Mod: return "MOD";
    case TagCategory::AttSay: return "ATT_SAY";
    case TagCategory::AttThink: return "ATT_THINK";
    case TagCategory::Cond: return "COND";
    case TagCategory::Count: return "COUNT";
    case TagCategory::Lneg: return "LNEG";
    case TagCategory::Neg: return "NEG";
  }
  return "?";
}

std::optional<TagCategory> tag_category_from_string(const std::string& s) {
  for (TagCategory c : kPrecedence) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

TagCategory tag_category_of(LexCategory c) {
  switch (c) {
    case LexCategory::Mod: return TagCategory::Mod;
    case LexCategory::Cond: return TagCategory::Cond;
    case LexCategory::AttSay: return TagCategory::AttSay;
    case LexCategory::AttThink: return TagCategory::AttThink;
    case LexCategory::Lneg: return TagCategory::Lneg;
  }
  return TagCategory::Mod;
}

std::vector<TriggerNode> find_triggers(const DepGraph& g, const TriggerLexicon& lex) {
  std::vector<std::string> lemmas;
  std::vector<std::string> pos_tags;
  lemmas.reserve(g.size());
  pos_tags.reserve(g.size());
  for (const auto& n : g.nodes()) {
    lemmas.push_back(n.lemma);
    pos_tags.push_back(n.pos);
  }

  std::vector<TriggerNode> triggers;
  std::size_t i = 0;
  while (i < lemmas.size()) {
    int idx = static_cast<int>(i);
    // Counterfactual nodes take priority over lexicon matches ("if" that
    // governs a counterfactual "had" is itself counterfactual, not COND).
    if (g.check_cf(idx)) {
      TriggerNode t;
      t.head = idx;
      t.span_start = idx;
      t.span_len = 1;
      t.source = TriggerSource::Counterfactual;
      t.category = TagCategory::Count;
      // The counterfactual cue is form-specific ("had"/"if"), so provenance
      // keeps the surface form.
      t.phrase = g.node(idx).form;
      std::transform(t.phrase.begin(), t.phrase.end(), t.phrase.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      triggers.push_back(std::move(t));
      ++i;
      continue;
    }
    if (auto match = lex.match_at(lemmas, pos_tags, i)) {
      const auto* entry = match->first;
      TriggerNode t;
      t.span_start = idx;
      t.span_len = match->second;
      t.head = span_head(g, idx, match->second);
      t.source = TriggerSource::Lexicon;
      t.category = tag_category_of(entry->effective_category());
      t.strength = entry->strength;
      t.subcategory = entry->subcategory;
      t.phrase = entry->phrase_string();
      triggers.push_back(std::move(t));
      i += static_cast<std::size_t>(match->second);
      continue;
    }
    if (kNegFunctionWords.count(lemmas[i])) {
      TriggerNode t;
      t.head = idx;
      t.span_start = idx;
      t.span_len = 1;
      t.source = TriggerSource::NegFunctionWord;
      t.category = TagCategory::Neg;
      t.phrase = lemmas[i];
      triggers.push_back(std::move(t));
    }
    ++i;
  }
  return triggers;
}

TagCategory tag_precedence(std::span<const TagCategory> categories) {
  if (categories.empty()) throw ContractError("tag_precedence: empty category set");
  for (TagCategory c : kPrecedence) {
    if (std::find(categories.begin(), categories.end(), c) != categories.end()) return c;
  }
  throw ContractError("tag_precedence: unknown category");
}

std::vector<TaggedRelation> tag_events(const DepGraph& g,
                                       std::span<const EventRelation> events,
                                       std::span<const TriggerNode> triggers) {
  std::vector<TaggedRelation> out;
  out.reserve(events.size());
  for (const auto& rel : events) {
    std::vector<const TriggerNode*> connected;
    for (const auto& t : triggers) {
      // A trigger inside the relation's own predicate chain is already part
      // of the predicate string; it tags the stripped variant instead.
      bool in_chain = false;
      for (int i = t.span_start; i < t.span_start + t.span_len; ++i) {
        if (std::find(rel.pred_nodes.begin(), rel.pred_nodes.end(), i) !=
            rel.pred_nodes.end()) {
          in_chain = true;
          break;
        }
      }
      if (in_chain) continue;
      if (g.path_between(t.head, rel.head)) connected.push_back(&t);
    }
    TaggedRelation tagged{rel, std::nullopt};
    if (!connected.empty()) {
      std::vector<TagCategory> categories;
      categories.reserve(connected.size());
      for (const auto* t : connected) categories.push_back(t->category);
      TagCategory final_cat = tag_precedence(categories);
      const TriggerNode* winner = nullptr;
      for (const auto* t : connected) {
        if (t->category == final_cat && (!winner || t->head < winner->head)) winner = t;
      }
      ModalTag tag;
      tag.category = final_cat;
      tag.trigger_node = winner->head;
      tag.strength = winner->strength;
      tag.subcategory = winner->subcategory;
      tag.trigger_phrase = winner->phrase;
      tagged.tag = tag;
    }
    out.push_back(std::move(tagged));
  }
  return out;
}

int map_certainty(std::optional<TagCategory> tag) {
  if (!tag) return 2;
  switch (*tag) {
    case TagCategory::Lneg:
    case TagCategory::Neg:
      return 0;
    default:
      return 1;
  }
}

}  // namespace montee
