#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "montee/corpus_io.hpp"

namespace montee {

struct DomainFilterConfig {
  std::string name;
  std::vector<std::string> type_prefixes;  // FIGER path prefixes
  double min_fraction = 0.0;  // strict: fraction must exceed this
  int min_count = 0;          // inclusive: at least this many in-domain mentions
};

struct TagDistribution {
  long long total = 0;
  long long untagged = 0;
  std::array<long long, 7> per_category{};  // indexed by TagCategory

  long long tagged() const { return total - untagged; }
  std::string to_string() const;
};

// True iff the fraction of in-domain entity mentions strictly exceeds
// min_fraction and the in-domain mention count reaches min_count.
// Documents with zero entity mentions are never in-domain.
bool classify_domain(const ParsedDocument& doc, const DomainFilterConfig& cfg);

// Prefix match on FIGER paths respecting '/' boundaries: "government"
// covers "government" and "government/political_party", not "governmental".
bool figer_matches_prefix(const std::string& type, const std::string& prefix);

TagDistribution tag_distribution(std::span<const RelationRecord> rels);

// Top-k trigger phrases by count; ties broken lexicographically.
std::vector<std::pair<std::string, long long>> trigger_frequency(
    std::span<const RelationRecord> rels, int k);

}  // namespace montee
