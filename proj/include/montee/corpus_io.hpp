#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "montee/depgraph.hpp"

namespace montee {

struct Sentence {
  std::string text;
  DepGraph graph;
};

struct ParsedDocument {
  std::string doc_id;
  std::vector<Sentence> sentences;
};

// One relation as serialized: doc_id + sentence index + flattened relation
// fields. `head` identifies the relation for evaluation: the id string is
// "<doc_id>:<sent>:<head>".
struct RecordArg {
  std::string text;
  std::string kind;  // "named" | "general"
  std::string figer_type;  // optional, empty = absent

  friend bool operator==(const RecordArg&, const RecordArg&) = default;
};

struct RelationRecord {
  std::string doc_id;
  int sent = 0;
  int head = -1;
  std::string pred;
  std::vector<int> slots;
  std::vector<RecordArg> args;
  std::optional<std::string> tag;       // final category, e.g. "MOD"
  std::optional<int> strength;
  std::optional<std::string> trigger;   // trigger lemma phrase (provenance)
  std::optional<int> certainty;         // 0/1/2, present with --certainty
  bool stripped = false;                // modifier-stripped variant

  std::string relation_id() const;

  friend bool operator==(const RelationRecord&, const RelationRecord&) = default;
};

// Streaming reader over line-delimited documents. Constant memory in the
// number of documents; errors name the offending line.
class CorpusReader {
 public:
  CorpusReader(std::istream& in, std::string source_name);

  std::optional<ParsedDocument> next();
  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
};

// Document serialization (one JSON line); used for fixture and synthetic
// corpus generation, and to make read/write round-trips testable.
std::string document_to_line(const ParsedDocument& doc);
ParsedDocument document_from_line(const std::string& line, const std::string& source,
                                  std::size_t line_number);

std::string record_to_line(const RelationRecord& rec);
RelationRecord record_from_line(const std::string& line, const std::string& source,
                                std::size_t line_number);

// Sorts by (doc_id, sent, head, stripped-last, pred, ...) and emits one JSON
// line per record. Deterministic: identical streams give identical bytes.
void write_relations(std::vector<RelationRecord> records, std::ostream& out);

std::vector<RelationRecord> read_relations(std::istream& in, const std::string& source);

bool record_order_less(const RelationRecord& a, const RelationRecord& b);

}  // namespace montee
