#include "montee/pipeline.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "montee/modtag.hpp"

namespace montee {

namespace {

RelationRecord to_record(const ParsedDocument& doc, int sent_index,
                         const TaggedRelation& tagged, const PipelineOptions& opts) {
  const EventRelation& rel = tagged.rel;
  RelationRecord rec;
  rec.doc_id = doc.doc_id;
  rec.sent = sent_index;
  rec.head = rel.head;
  rec.pred = rel.pred_display;
  rec.slots = rel.slots;
  for (const auto& a : rel.args) {
    RecordArg ra;
    ra.text = a.text;
    ra.kind = a.kind == ArgKind::Named ? "named" : "general";
    ra.figer_type = a.figer_type;
    rec.args.push_back(std::move(ra));
  }
  if (tagged.tag) {
    rec.tag = to_string(tagged.tag->category);
    rec.strength = tagged.tag->strength;
    rec.trigger = tagged.tag->trigger_phrase;
  }
  if (opts.certainty) {
    rec.certainty = map_certainty(tagged.tag ? std::optional(tagged.tag->category)
                                             : std::nullopt);
  }
  rec.stripped = rel.is_stripped_variant;
  return rec;
}

}  // namespace

std::vector<RelationRecord> process_document(const ParsedDocument& doc,
                                             const TriggerLexicon& lex,
                                             const PipelineOptions& opts) {
  ExtractOptions ex_opts;
  ex_opts.strip_modifiers = opts.strip_modifiers;
  ex_opts.nary = opts.nary;

  std::vector<RelationRecord> records;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const DepGraph& g = doc.sentences[s].graph;
    auto relations = extract_all(g, ex_opts);
    auto triggers = find_triggers(g, lex);
    auto tagged = tag_events(g, relations, triggers);
    for (const auto& t : tagged) {
      // Bare prepositional relations only feed n-ary composition.
      if (t.rel.bare_preposition) continue;
      records.push_back(to_record(doc, static_cast<int>(s), t, opts));
    }
  }
  return records;
}

std::vector<RelationRecord> process_corpus_serial(std::span<const ParsedDocument> docs,
                                                  const TriggerLexicon& lex,
                                                  const PipelineOptions& opts) {
  std::vector<RelationRecord> records;
  for (const auto& doc : docs) {
    auto recs = process_document(doc, lex, opts);
    records.insert(records.end(), std::make_move_iterator(recs.begin()),
                   std::make_move_iterator(recs.end()));
  }
  std::sort(records.begin(), records.end(), record_order_less);
  return records;
}

std::vector<RelationRecord> process_corpus_parallel(std::span<const ParsedDocument> docs,
                                                    const TriggerLexicon& lex,
                                                    const PipelineOptions& opts) {
  std::vector<std::vector<RelationRecord>> per_doc(docs.size());
  const int workers = std::max(1, opts.workers);
#ifdef _OPENMP
#pragma omp parallel for num_threads(workers) schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(docs.size()); ++i) {
    per_doc[static_cast<std::size_t>(i)] =
        process_document(docs[static_cast<std::size_t>(i)], lex, opts);
  }
  std::vector<RelationRecord> records;
  for (auto& recs : per_doc) {
    records.insert(records.end(), std::make_move_iterator(recs.begin()),
                   std::make_move_iterator(recs.end()));
  }
  std::sort(records.begin(), records.end(), record_order_less);
  return records;
}

}  // namespace montee
