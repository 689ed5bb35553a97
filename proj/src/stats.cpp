#include "montee/stats.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "montee/modtag.hpp"

namespace montee {

bool figer_matches_prefix(const std::string& type, const std::string& prefix) {
  if (prefix.empty()) return false;
  if (type == prefix) return true;
  if (type.size() <= prefix.size() || type.compare(0, prefix.size(), prefix) != 0) {
    return false;
  }
  return prefix.back() == '/' || type[prefix.size()] == '/';
}

bool classify_domain(const ParsedDocument& doc, const DomainFilterConfig& cfg) {
  long long total = 0;
  long long in_domain = 0;
  for (const auto& sent : doc.sentences) {
    for (const auto& n : sent.graph.nodes()) {
      if (!n.entity) continue;
      total++;  // entity mentions, not unique entities
      for (const auto& prefix : cfg.type_prefixes) {
        if (figer_matches_prefix(n.entity->figer_type, prefix)) {
          in_domain++;
          break;
        }
      }
    }
  }
  if (total == 0) return false;
  double fraction = static_cast<double>(in_domain) / static_cast<double>(total);
  return fraction > cfg.min_fraction && in_domain >= cfg.min_count;
}

TagDistribution tag_distribution(std::span<const RelationRecord> rels) {
  TagDistribution dist;
  for (const auto& r : rels) {
    dist.total++;
    if (!r.tag) {
      dist.untagged++;
      continue;
    }
    auto cat = tag_category_from_string(*r.tag);
    if (cat) {
      dist.per_category[static_cast<std::size_t>(*cat)]++;
    } else {
      dist.untagged++;  // unknown tag strings counted as untagged
    }
  }
  return dist;
}

std::vector<std::pair<std::string, long long>> trigger_frequency(
    std::span<const RelationRecord> rels, int k) {
  std::map<std::string, long long> counts;
  for (const auto& r : rels) {
    if (r.trigger) counts[*r.trigger]++;
  }
  std::vector<std::pair<std::string, long long>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (k >= 0 && ranked.size() > static_cast<std::size_t>(k)) {
    ranked.resize(static_cast<std::size_t>(k));
  }
  return ranked;
}

std::string TagDistribution::to_string() const {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "Relations: " << total << "\n";
  double tagged_pct = total > 0 ? 100.0 * static_cast<double>(tagged()) /
                                      static_cast<double>(total)
                                : 0.0;
  double untagged_pct = total > 0 ? 100.0 * static_cast<double>(untagged) /
                                        static_cast<double>(total)
                                  : 0.0;
  out << "Untagged: " << untagged << " (" << untagged_pct << "%)\n";
  out << "Tagged: " << tagged() << " (" << tagged_pct << "%)\n";
  const char* names[7] = {"Modal",          "ATT_say",       "ATT_think", "Conditional",
                          "Counterfactual", "Lexical Negation", "Negation"};
  // Report in presentation order: lexical negation before plain negation.
  const std::size_t order[7] = {0, 1, 2, 3, 4, 6, 5};
  for (std::size_t k = 0; k < 7; ++k) {
    std::size_t c = order[k];
    double pct = tagged() > 0 ? 100.0 * static_cast<double>(per_category[c]) /
                                    static_cast<double>(tagged())
                              : 0.0;
    out << "  " << names[c] << ": " << per_category[c] << " (" << pct
        << "% of tagged)\n";
  }
  return out.str();
}

}  // namespace montee
