#include "montee/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "montee/errors.hpp"

namespace montee {

namespace {

std::string to_lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> cols;
  std::string::size_type start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

}  // namespace

std::string to_string(LexCategory c) {
  switch (c) {
    case LexCategory::Mod: return "MOD";
    case LexCategory::Cond: return "COND";
    case LexCategory::AttSay: return "ATT_SAY";
    case LexCategory::AttThink: return "ATT_THINK";
    case LexCategory::Lneg: return "LNEG";
  }
  return "?";
}

std::optional<LexCategory> lex_category_from_string(const std::string& s) {
  if (s == "MOD") return LexCategory::Mod;
  if (s == "COND") return LexCategory::Cond;
  if (s == "ATT_SAY") return LexCategory::AttSay;
  if (s == "ATT_THINK") return LexCategory::AttThink;
  if (s == "LNEG") return LexCategory::Lneg;
  return std::nullopt;
}

bool LexiconEntry::pos_matches(const std::string& token_pos) const {
  if (pos_is_wildcard()) return true;
  return token_pos.rfind(pos, 0) == 0;  // prefix: VB covers VBD/VBZ/..., MD only MD
}

std::string LexiconEntry::phrase_string() const {
  std::string out;
  for (std::size_t i = 0; i < lemma_phrase.size(); ++i) {
    if (i) out += ' ';
    out += lemma_phrase[i];
  }
  return out;
}

TriggerLexicon::TriggerLexicon() { trie_.emplace_back(); }

void TriggerLexicon::add_entry(LexiconEntry entry) {
  int node = 0;
  for (const auto& tok : entry.lemma_phrase) {
    auto it = trie_[static_cast<std::size_t>(node)].children.find(tok);
    if (it == trie_[static_cast<std::size_t>(node)].children.end()) {
      int next = static_cast<int>(trie_.size());
      trie_[static_cast<std::size_t>(node)].children.emplace(tok, next);
      trie_.emplace_back();
      node = next;
    } else {
      node = it->second;
    }
  }
  entries_.push_back(std::move(entry));
  trie_[static_cast<std::size_t>(node)].entry_ids.push_back(
      static_cast<int>(entries_.size()) - 1);
}

TriggerLexicon TriggerLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  return parse(in, path);
}

TriggerLexicon TriggerLexicon::parse(std::istream& in, const std::string& source_name) {
  TriggerLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw DataError(source_name + ": " + what + ", line " + std::to_string(line_no));
    };
    auto cols = split_tsv(line);
    if (cols.size() < 3 || cols.size() > 5) fail("wrong column count");
    LexiconEntry entry;
    entry.lemma_phrase = split_tokens(to_lower(cols[0]));
    if (entry.lemma_phrase.empty()) fail("empty lemma phrase");
    auto cat = lex_category_from_string(cols[1]);
    if (!cat) fail("unknown category '" + cols[1] + "'");
    entry.category = *cat;
    entry.pos = cols[2];
    if (cols.size() >= 4 && !cols[3].empty()) {
      int strength = 0;
      std::size_t used = 0;
      try {
        strength = std::stoi(cols[3], &used);
      } catch (const std::exception&) {
        fail("non-integer strength '" + cols[3] + "'");
      }
      if (used != cols[3].size()) fail("non-integer strength '" + cols[3] + "'");
      if (strength < 0 || strength > 4) fail("strength out of range");
      entry.strength = strength;
    }
    if (cols.size() == 5 && !cols[4].empty()) entry.subcategory = cols[4];
    lex.add_entry(std::move(entry));
  }
  return lex;
}

std::optional<std::pair<const LexiconEntry*, int>> TriggerLexicon::match_at(
    std::span<const std::string> lemmas, std::span<const std::string> pos_tags,
    std::size_t i) const {
  const LexiconEntry* best = nullptr;
  int best_len = 0;
  int node = 0;
  for (std::size_t j = i; j < lemmas.size(); ++j) {
    auto it = trie_[static_cast<std::size_t>(node)].children.find(lemmas[j]);
    if (it == trie_[static_cast<std::size_t>(node)].children.end()) break;
    node = it->second;
    int span = static_cast<int>(j - i) + 1;
    // POS constraint applies to the phrase's first token.
    const LexiconEntry* exact = nullptr;
    const LexiconEntry* wildcard = nullptr;
    for (int id : trie_[static_cast<std::size_t>(node)].entry_ids) {
      const auto& e = entries_[static_cast<std::size_t>(id)];
      if (i < pos_tags.size() && !e.pos_matches(pos_tags[i])) continue;
      if (e.pos_is_wildcard()) {
        if (!wildcard) wildcard = &e;
      } else if (!exact) {
        exact = &e;
      }
    }
    const LexiconEntry* chosen = exact ? exact : wildcard;
    if (chosen) {
      best = chosen;
      best_len = span;
    }
  }
  if (!best) return std::nullopt;
  return std::make_pair(best, best_len);
}

ValidationReport TriggerLexicon::validate() const {
  ValidationReport report;
  report.entry_count = entries_.size();
  std::map<std::pair<std::string, std::string>, int> seen;  // (phrase, pos) -> count
  for (const auto& e : entries_) {
    report.per_category[to_string(e.category)]++;
    seen[{e.phrase_string(), e.pos}]++;
    if (e.strength && *e.strength <= 1 && e.category != LexCategory::Lneg &&
        e.category != LexCategory::Mod) {
      report.warnings.push_back("entry '" + e.phrase_string() + "' has strength " +
                                std::to_string(*e.strength) +
                                " but category " + to_string(e.category) +
                                "; treated as LNEG");
    }
  }
  for (const auto& [key, count] : seen) {
    if (count > 1) {
      report.errors.push_back("duplicate entry: '" + key.first + "' / " +
                              (key.second.empty() ? "*" : key.second) + " (" +
                              std::to_string(count) + " rows)");
    }
  }
  return report;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  out << entry_count << " entries\n";
  for (const auto& [cat, count] : per_category) {
    out << "  " << cat << ": " << count << "\n";
  }
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  for (const auto& e : errors) out << "error: " << e << "\n";
  return out.str();
}

}  // namespace montee
