#pragma once

#include <memory>
#include <string>
#include <vector>

namespace montee {

enum class ArgKind { Named, General };

struct Argument {
  int head = -1;            // head node index in the sentence graph
  std::string text;         // surface span (determiners stripped)
  ArgKind kind = ArgKind::General;
  std::string figer_type;   // empty unless kind == Named and a type is known
};

enum class RelKind { Unary, Binary, Nary };

struct EventRelation {
  std::vector<int> pred_nodes;   // token indices forming the predicate, in order
  std::string pred_display;      // human-readable predicate string
  std::string pred_lemmas;       // canonical dotted lemma chain, e.g. "fail.to.investigate"
  int head = -1;                 // tagging target: the main verb (or sole pred node)
  std::vector<int> slots;        // CCG slot per argument, |slots| == |args|
  std::vector<Argument> args;
  RelKind kind = RelKind::Unary;
  bool bare_preposition = false;     // predicate is a single preposition node
  bool is_stripped_variant = false;  // produced by modifier stripping
  std::shared_ptr<EventRelation> stripped;  // variant without the modifier, if any

  // Canonical rendering: dotted lemma chain with argument slots appended,
  // e.g. "explode.1", "attack.1.2".
  std::string canonical() const;
};

}  // namespace montee
