#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "montee/corpus_io.hpp"
#include "montee/depgraph.hpp"
#include "montee/errors.hpp"

namespace montee::fixtures {

inline DepNode tok(int i, std::string form, std::string lemma, std::string pos,
                   std::string supertag = "") {
  DepNode n;
  n.index = i;
  n.form = std::move(form);
  n.lemma = std::move(lemma);
  n.pos = std::move(pos);
  n.supertag = std::move(supertag);
  return n;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MONTEE_FIXTURE_DIR) + "/" + name;
}

inline std::vector<ParsedDocument> load_docs(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw IoError("missing fixture: " + name);
  CorpusReader reader(in, name);
  std::vector<ParsedDocument> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  return docs;
}

// "Johnson doubts that Labour will win the election"
// 0 Johnson 1 doubts 2 that 3 Labour 4 will 5 win 6 the 7 election
inline DepGraph doubts_will_win(bool with_will_edge = true) {
  std::vector<DepNode> nodes = {
      tok(0, "Johnson", "johnson", "NNP"), tok(1, "doubts", "doubt", "VBZ"),
      tok(2, "that", "that", "IN"),        tok(3, "Labour", "labour", "NNP"),
      tok(4, "will", "will", "MD"),        tok(5, "win", "win", "VB"),
      tok(6, "the", "the", "DT"),          tok(7, "election", "election", "NN")};
  std::vector<DepEdge> edges = {{1, 0, 1}, {1, 5, 2}, {5, 3, 1}, {5, 7, 2}, {7, 6, 1}};
  if (with_will_edge) edges.push_back({4, 5, 2});
  return DepGraph(std::move(nodes), std::move(edges));
}

// "bombs exploded"
inline DepGraph bombs_exploded() {
  return DepGraph({tok(0, "bombs", "bomb", "NNS"), tok(1, "exploded", "explode", "VBD")},
                  {{1, 0, 1}});
}

// "protests were held"
inline DepGraph protests_were_held() {
  return DepGraph({tok(0, "protests", "protest", "NNS"), tok(1, "were", "be", "VBD"),
                   tok(2, "held", "hold", "VBN")},
                  {{1, 2, 2}, {2, 0, 1}});
}

// "Greta Thunberg is a climate activist"
inline DepGraph greta_copular() {
  std::vector<DepNode> nodes = {
      tok(0, "Greta", "greta", "NNP"),   tok(1, "Thunberg", "thunberg", "NNP"),
      tok(2, "is", "be", "VBZ"),         tok(3, "a", "a", "DT"),
      tok(4, "climate", "climate", "NN"), tok(5, "activist", "activist", "NN")};
  nodes[1].entity = EntityRef{"Greta_Thunberg", "person/activist"};
  return DepGraph(std::move(nodes),
                  {{1, 0, 1}, {2, 1, 1}, {2, 5, 2}, {5, 3, 1}, {5, 4, 2}});
}

// "Police were attacked by protesters"
inline DepGraph police_attacked_by() {
  return DepGraph({tok(0, "Police", "police", "NNS"), tok(1, "were", "be", "VBD"),
                   tok(2, "attacked", "attack", "VBN"), tok(3, "by", "by", "IN"),
                   tok(4, "protesters", "protester", "NNS")},
                  {{1, 2, 2}, {2, 0, 1}, {2, 3, 3}, {3, 4, 1}});
}

// "Protesters attacked the police"
inline DepGraph protesters_attacked() {
  return DepGraph({tok(0, "Protesters", "protester", "NNS"),
                   tok(1, "attacked", "attack", "VBD"), tok(2, "the", "the", "DT"),
                   tok(3, "police", "police", "NNS")},
                  {{1, 0, 1}, {1, 3, 2}, {3, 2, 1}});
}

// "Protesters marched on Parliament Square in London [near the Thames]"
inline DepGraph marched_on(bool second_attachment = false) {
  std::vector<DepNode> nodes = {
      tok(0, "Protesters", "protester", "NNS"), tok(1, "marched", "march", "VBD"),
      tok(2, "on", "on", "IN"),                 tok(3, "Parliament", "parliament", "NNP"),
      tok(4, "Square", "square", "NNP"),        tok(5, "in", "in", "IN"),
      tok(6, "London", "london", "NNP")};
  std::vector<DepEdge> edges = {{1, 0, 1}, {1, 2, 2}, {2, 4, 1}, {4, 3, 1},
                                {5, 4, 1}, {5, 6, 2}};
  if (second_attachment) {
    nodes.push_back(tok(7, "near", "near", "IN"));
    nodes.push_back(tok(8, "Thames", "thames", "NNP"));
    edges.push_back({7, 4, 1});
    edges.push_back({7, 8, 2});
  }
  nodes[6].entity = EntityRef{"London", "location/city"};
  return DepGraph(std::move(nodes), std::move(edges));
}

}  // namespace montee::fixtures
