#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace montee {

// Stored lexicon categories. Counterfactuals (COUNT) and closed-class
// negation (NEG) are detected structurally, never via the lexicon.
enum class LexCategory { Mod, Cond, AttSay, AttThink, Lneg };

std::string to_string(LexCategory c);
std::optional<LexCategory> lex_category_from_string(const std::string& s);

struct LexiconEntry {
  std::vector<std::string> lemma_phrase;  // 1..n lowercase lemma tokens
  LexCategory category = LexCategory::Mod;
  std::string pos;  // Penn-style prefix constraint; "*" = wildcard
  std::optional<int> strength;  // 0..4, 4 = definitely, 0 = definitely not
  std::optional<std::string> subcategory;  // deontic | intention | desire | epistemic

  // Strength 0/1 entries behave as lexical negation triggers regardless of
  // the stored category.
  LexCategory effective_category() const {
    if (strength && *strength <= 1) return LexCategory::Lneg;
    return category;
  }

  bool pos_is_wildcard() const { return pos.empty() || pos == "*"; }
  bool pos_matches(const std::string& token_pos) const;
  std::string phrase_string() const;  // tokens joined by spaces
};

struct ValidationReport {
  std::size_t entry_count = 0;
  std::map<std::string, std::size_t> per_category;  // stored category -> count
  std::vector<std::string> warnings;
  std::vector<std::string> errors;

  bool ok() const { return errors.empty(); }
  std::string to_string() const;
};

// Immutable after load; safe for concurrent reads.
class TriggerLexicon {
 public:
  TriggerLexicon();

  static TriggerLexicon load(const std::string& path);
  static TriggerLexicon parse(std::istream& in, const std::string& source_name);

  // Longest match over lemmas[i..]; the POS constraint applies to the first
  // token of the phrase. Returns the entry and the matched span length.
  std::optional<std::pair<const LexiconEntry*, int>> match_at(
      std::span<const std::string> lemmas, std::span<const std::string> pos_tags,
      std::size_t i) const;

  ValidationReport validate() const;

  std::size_t size() const { return entries_.size(); }
  const std::vector<LexiconEntry>& entries() const { return entries_; }

 private:
  void add_entry(LexiconEntry entry);

  struct TrieNode {
    std::map<std::string, int> children;
    std::vector<int> entry_ids;  // entries terminating at this node
  };

  std::vector<LexiconEntry> entries_;
  std::vector<TrieNode> trie_;  // node 0 is the root
};

}  // namespace montee
