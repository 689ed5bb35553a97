#include "montee/corpus_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <tuple>

#include <json.hpp>

#include "montee/errors.hpp"

namespace montee {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& what) {
  throw DataError(source + ": " + what + ", line " + std::to_string(line));
}

}  // namespace

std::string RelationRecord::relation_id() const {
  return doc_id + ":" + std::to_string(sent) + ":" + std::to_string(head);
}

CorpusReader::CorpusReader(std::istream& in, std::string source_name)
    : in_(in), source_(std::move(source_name)) {}

std::optional<ParsedDocument> CorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    return document_from_line(line, source_, line_);
  }
  return std::nullopt;
}

ParsedDocument document_from_line(const std::string& line, const std::string& source,
                                  std::size_t line_number) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    fail(source, line_number, std::string("invalid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) fail(source, line_number, "document is not an object");
  if (j.contains("v") && j["v"] != 1) {
    fail(source, line_number, "unknown schema version");
  }
  if (!j.contains("doc_id") || !j["doc_id"].is_string()) {
    fail(source, line_number, "missing 'doc_id' field");
  }
  if (!j.contains("sentences") || !j["sentences"].is_array()) {
    fail(source, line_number, "missing 'sentences' field");
  }
  ParsedDocument doc;
  doc.doc_id = j["doc_id"].get<std::string>();
  if (doc.doc_id.empty()) fail(source, line_number, "empty doc_id");
  try {
    for (const auto& js : j["sentences"]) {
      Sentence sent;
      sent.text = js.value("text", std::string{});
      std::vector<DepNode> nodes;
      for (const auto& jt : js.at("tokens")) {
        DepNode n;
        n.index = jt.at("i").get<int>();
        n.form = jt.at("form").get<std::string>();
        n.lemma = jt.at("lemma").get<std::string>();
        n.pos = jt.at("pos").get<std::string>();
        n.supertag = jt.value("supertag", std::string{});
        if (jt.contains("entity")) {
          EntityRef e;
          e.id = jt["entity"].value("id", std::string{});
          e.figer_type = jt["entity"].value("figer_type", std::string{});
          n.entity = std::move(e);
        }
        nodes.push_back(std::move(n));
      }
      std::vector<DepEdge> edges;
      if (js.contains("edges")) {
        for (const auto& je : js["edges"]) {
          if (!je.is_array() || je.size() != 3) {
            fail(source, line_number, "edge is not a [head, dep, slot] triple");
          }
          edges.push_back({je[0].get<int>(), je[1].get<int>(), je[2].get<int>()});
        }
      }
      sent.graph = DepGraph(std::move(nodes), std::move(edges));
      doc.sentences.push_back(std::move(sent));
    }
  } catch (const json::exception& e) {
    fail(source, line_number, std::string("malformed sentence (") + e.what() + ")");
  } catch (const DataError& e) {
    fail(source, line_number, e.what());
  }
  return doc;
}

std::string document_to_line(const ParsedDocument& doc) {
  json j;
  j["doc_id"] = doc.doc_id;
  j["sentences"] = json::array();
  for (const auto& sent : doc.sentences) {
    json js;
    js["text"] = sent.text;
    js["tokens"] = json::array();
    for (const auto& n : sent.graph.nodes()) {
      json jt;
      jt["i"] = n.index;
      jt["form"] = n.form;
      jt["lemma"] = n.lemma;
      jt["pos"] = n.pos;
      jt["supertag"] = n.supertag;
      if (n.entity) {
        jt["entity"] = {{"id", n.entity->id}, {"figer_type", n.entity->figer_type}};
      }
      js["tokens"].push_back(std::move(jt));
    }
    js["edges"] = json::array();
    for (const auto& e : sent.graph.edges()) {
      js["edges"].push_back(json::array({e.head, e.dep, e.slot}));
    }
    j["sentences"].push_back(std::move(js));
  }
  return j.dump();
}

std::string record_to_line(const RelationRecord& rec) {
  json j;
  j["doc_id"] = rec.doc_id;
  j["sent"] = rec.sent;
  j["head"] = rec.head;
  j["pred"] = rec.pred;
  j["slots"] = rec.slots;
  j["args"] = json::array();
  for (const auto& a : rec.args) {
    json ja;
    ja["text"] = a.text;
    ja["kind"] = a.kind;
    if (!a.figer_type.empty()) ja["type"] = a.figer_type;
    j["args"].push_back(std::move(ja));
  }
  if (rec.tag) j["tag"] = *rec.tag;
  if (rec.strength) j["strength"] = *rec.strength;
  if (rec.trigger) j["trigger"] = *rec.trigger;
  if (rec.certainty) j["certainty"] = *rec.certainty;
  if (rec.stripped) j["stripped"] = true;
  return j.dump();
}

RelationRecord record_from_line(const std::string& line, const std::string& source,
                                std::size_t line_number) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    fail(source, line_number, std::string("invalid JSON (") + e.what() + ")");
  }
  RelationRecord rec;
  try {
    rec.doc_id = j.at("doc_id").get<std::string>();
    rec.sent = j.at("sent").get<int>();
    rec.head = j.at("head").get<int>();
    rec.pred = j.at("pred").get<std::string>();
    rec.slots = j.at("slots").get<std::vector<int>>();
    for (const auto& ja : j.at("args")) {
      RecordArg a;
      a.text = ja.at("text").get<std::string>();
      a.kind = ja.at("kind").get<std::string>();
      a.figer_type = ja.value("type", std::string{});
      rec.args.push_back(std::move(a));
    }
    if (j.contains("tag")) rec.tag = j["tag"].get<std::string>();
    if (j.contains("strength")) rec.strength = j["strength"].get<int>();
    if (j.contains("trigger")) rec.trigger = j["trigger"].get<std::string>();
    if (j.contains("certainty")) rec.certainty = j["certainty"].get<int>();
    rec.stripped = j.value("stripped", false);
  } catch (const json::exception& e) {
    fail(source, line_number, std::string("malformed relation record (") + e.what() + ")");
  }
  return rec;
}

bool record_order_less(const RelationRecord& a, const RelationRecord& b) {
  auto key = [](const RelationRecord& r) {
    return std::make_tuple(std::cref(r.doc_id), r.sent, r.head, r.stripped,
                           std::cref(r.pred));
  };
  if (key(a) != key(b)) return key(a) < key(b);
  return record_to_line(a) < record_to_line(b);
}

void write_relations(std::vector<RelationRecord> records, std::ostream& out) {
  std::sort(records.begin(), records.end(), record_order_less);
  for (const auto& rec : records) {
    out << record_to_line(rec) << '\n';
  }
  if (!out) throw IoError("failed writing relation records");
}

std::vector<RelationRecord> read_relations(std::istream& in, const std::string& source) {
  std::vector<RelationRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    records.push_back(record_from_line(line, source, line_no));
  }
  return records;
}

}  // namespace montee
