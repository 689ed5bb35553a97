#pragma once

#include <array>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "montee/corpus_io.hpp"

namespace montee {

struct GoldRecord {
  std::string id;  // "<doc_id>:<sent>:<head>"
  int label = 0;   // 0 didn't happen, 1 uncertain, 2 happened
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct ScoreReport {
  std::array<std::array<long long, 3>, 3> matrix{};  // [gold][pred]
  std::array<ClassMetrics, 3> per_class{};
  ClassMetrics micro{};
  ClassMetrics macro{};  // macro F1 = unweighted mean of per-class F1
  long long total = 0;

  std::string to_string() const;
};

// Requires identical id sets; throws DataError listing missing/extra ids.
// 0/0 precision or recall is 0, F1 of (0,0) is 0.
ScoreReport score(std::span<const GoldRecord> gold, std::span<const GoldRecord> pred);

// kappa = (p_o - p_e) / (1 - p_e); returns 1.0 when p_e == 1 and p_o == 1.
// Throws DataError on length mismatch or empty input.
double cohens_kappa(std::span<const int> a, std::span<const int> b);

// Documents whose tagged-relation fraction >= min_tagged_fraction.
// Documents with zero relations are excluded.
std::set<std::string> sample_dense(std::span<const RelationRecord> rels,
                                   double min_tagged_fraction);

// TSV of "relation-id<TAB>label"; '#' comments and blank lines skipped.
std::vector<GoldRecord> read_gold_tsv(std::istream& in, const std::string& source);

}  // namespace montee
