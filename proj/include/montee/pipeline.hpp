#pragma once

#include <span>
#include <vector>

#include "montee/corpus_io.hpp"
#include "montee/lexicon.hpp"
#include "montee/relex.hpp"

namespace montee {

struct PipelineOptions {
  bool strip_modifiers = false;
  bool nary = false;
  bool certainty = false;
  int workers = 1;
};

// Extract + tag one document. Pure: the same (document, lexicon, options)
// always yields the same records.
std::vector<RelationRecord> process_document(const ParsedDocument& doc,
                                             const TriggerLexicon& lex,
                                             const PipelineOptions& opts);

// Serial reference implementation, kept for testing the parallel path.
std::vector<RelationRecord> process_corpus_serial(std::span<const ParsedDocument> docs,
                                                  const TriggerLexicon& lex,
                                                  const PipelineOptions& opts);

// OpenMP over documents. Output is sorted, so it is byte-identical to the
// serial path for any worker count.
std::vector<RelationRecord> process_corpus_parallel(std::span<const ParsedDocument> docs,
                                                    const TriggerLexicon& lex,
                                                    const PipelineOptions& opts);

}  // namespace montee
