#include "montee/synthetic.hpp"

#include <random>
#include <sstream>

namespace montee::synthetic {

namespace {

struct Vocab {
  const char* form;
  const char* lemma;
};

constexpr Vocab kSubjects[] = {{"protesters", "protester"}, {"police", "police"},
                               {"journalists", "journalist"}, {"voters", "voter"},
                               {"officials", "official"},    {"bombs", "bomb"}};

constexpr Vocab kNamedSubjects[] = {{"Merkel", "merkel"}, {"Johnson", "johnson"},
                                    {"Labour", "labour"}, {"Parliament", "parliament"}};

constexpr const char* kNamedTypes[] = {"person/politician", "person/politician",
                                       "government/political_party",
                                       "government/legislature"};

constexpr Vocab kVerbs[] = {{"attacked", "attack"}, {"supported", "support"},
                            {"won", "win"},         {"criticised", "criticise"},
                            {"held", "hold"},       {"blocked", "block"}};

constexpr Vocab kObjects[] = {{"election", "election"}, {"government", "government"},
                              {"protest", "protest"},   {"reform", "reform"},
                              {"deal", "deal"}};

constexpr Vocab kModals[] = {{"will", "will"}, {"would", "would"}, {"may", "may"},
                             {"can", "can"},   {"should", "should"}};

DepNode token(int i, const char* form, const char* lemma, const char* pos) {
  DepNode n;
  n.index = i;
  n.form = form;
  n.lemma = lemma;
  n.pos = pos;
  return n;
}

}  // namespace

TriggerLexicon default_lexicon() {
  static const char* kTsv =
      "will\tMOD\tMD\t3\t\n"
      "would\tMOD\tMD\t2\t\n"
      "may\tMOD\tMD\t2\t\n"
      "can\tMOD\tMD\t2\t\n"
      "should\tMOD\tMD\t3\tdeontic\n"
      "say\tATT_SAY\tVB\t4\t\n"
      "think\tATT_THINK\tVB\t2\t\n"
      "doubt\tATT_THINK\tVB\t\t\n"
      "if\tCOND\tIN\t2\t\n"
      "fail\tLNEG\tVB\t1\t\n"
      "refuse\tLNEG\tVB\t1\t\n"
      "ready\tMOD\tJJ\t2\t\n";
  std::istringstream in(kTsv);
  return TriggerLexicon::parse(in, "<builtin>");
}

std::vector<ParsedDocument> make_corpus(int n_docs, int sentences_per_doc,
                                        unsigned seed) {
  std::mt19937 rng(seed);
  auto pick = [&rng](auto& arr) -> decltype(auto) {
    std::uniform_int_distribution<std::size_t> dist(0, std::size(arr) - 1);
    return arr[dist(rng)];
  };

  std::vector<ParsedDocument> docs;
  docs.reserve(static_cast<std::size_t>(n_docs));
  for (int d = 0; d < n_docs; ++d) {
    ParsedDocument doc;
    std::ostringstream id;
    id << "doc" << d;
    doc.doc_id = id.str();
    for (int s = 0; s < sentences_per_doc; ++s) {
      std::uniform_int_distribution<int> shape_dist(0, 5);
      const int shape = shape_dist(rng);
      std::vector<DepNode> nodes;
      std::vector<DepEdge> edges;
      switch (shape) {
        case 0: {  // Subj verb the Obj.
          auto subj = pick(kSubjects);
          auto verb = pick(kVerbs);
          auto obj = pick(kObjects);
          nodes = {token(0, subj.form, subj.lemma, "NNS"),
                   token(1, verb.form, verb.lemma, "VBD"),
                   token(2, "the", "the", "DT"),
                   token(3, obj.form, obj.lemma, "NN")};
          edges = {{1, 0, 1}, {1, 3, 2}, {3, 2, 1}};
          break;
        }
        case 1: {  // Subj md verb the Obj.
          auto subj = pick(kSubjects);
          auto md = pick(kModals);
          auto verb = pick(kVerbs);
          auto obj = pick(kObjects);
          nodes = {token(0, subj.form, subj.lemma, "NNS"),
                   token(1, md.form, md.lemma, "MD"),
                   token(2, verb.lemma, verb.lemma, "VB"),
                   token(3, "the", "the", "DT"),
                   token(4, obj.form, obj.lemma, "NN")};
          edges = {{1, 2, 2}, {2, 0, 1}, {2, 4, 2}, {4, 3, 1}};
          break;
        }
        case 2: {  // Subj did not verb the Obj.
          auto subj = pick(kSubjects);
          auto verb = pick(kVerbs);
          auto obj = pick(kObjects);
          nodes = {token(0, subj.form, subj.lemma, "NNS"),
                   token(1, "did", "do", "VBD"),
                   token(2, "not", "not", "RB"),
                   token(3, verb.lemma, verb.lemma, "VB"),
                   token(4, "the", "the", "DT"),
                   token(5, obj.form, obj.lemma, "NN")};
          edges = {{1, 3, 2}, {2, 3, 1}, {3, 0, 1}, {3, 5, 2}, {5, 4, 1}};
          break;
        }
        case 3: {  // Name says Subj verb the Obj.
          std::uniform_int_distribution<std::size_t> ne(0, std::size(kNamedSubjects) - 1);
          std::size_t k = ne(rng);
          auto subj = pick(kSubjects);
          auto verb = pick(kVerbs);
          auto obj = pick(kObjects);
          nodes = {token(0, kNamedSubjects[k].form, kNamedSubjects[k].lemma, "NNP"),
                   token(1, "says", "say", "VBZ"),
                   token(2, subj.form, subj.lemma, "NNS"),
                   token(3, verb.form, verb.lemma, "VBD"),
                   token(4, "the", "the", "DT"),
                   token(5, obj.form, obj.lemma, "NN")};
          nodes[0].entity = EntityRef{kNamedSubjects[k].lemma, kNamedTypes[k]};
          edges = {{1, 0, 1}, {1, 3, 2}, {3, 2, 1}, {3, 5, 2}, {5, 4, 1}};
          break;
        }
        case 4: {  // If Subj verb the Obj ...
          auto subj = pick(kSubjects);
          auto verb = pick(kVerbs);
          auto obj = pick(kObjects);
          nodes = {token(0, "If", "if", "IN"),
                   token(1, subj.form, subj.lemma, "NNS"),
                   token(2, verb.form, verb.lemma, "VBP"),
                   token(3, "the", "the", "DT"),
                   token(4, obj.form, obj.lemma, "NN")};
          edges = {{0, 2, 2}, {2, 1, 1}, {2, 4, 2}, {4, 3, 1}};
          break;
        }
        default: {  // Subj failed to verb the Obj.
          auto subj = pick(kSubjects);
          auto verb = pick(kVerbs);
          auto obj = pick(kObjects);
          nodes = {token(0, subj.form, subj.lemma, "NNS"),
                   token(1, "failed", "fail", "VBD"),
                   token(2, "to", "to", "TO"),
                   token(3, verb.lemma, verb.lemma, "VB"),
                   token(4, "the", "the", "DT"),
                   token(5, obj.form, obj.lemma, "NN")};
          edges = {{1, 0, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 1}, {3, 5, 2}, {5, 4, 1}};
          break;
        }
      }
      Sentence sent;
      std::ostringstream text;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) text << ' ';
        text << nodes[i].form;
      }
      sent.text = text.str();
      sent.graph = DepGraph(std::move(nodes), std::move(edges));
      doc.sentences.push_back(std::move(sent));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace montee::synthetic
