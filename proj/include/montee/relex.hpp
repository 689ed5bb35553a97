#pragma once

#include <span>
#include <vector>

#include "montee/depgraph.hpp"
#include "montee/relation.hpp"

namespace montee {

struct ExtractOptions {
  bool strip_modifiers = false;  // attach modifier-stripped variants
  bool nary = false;             // compose prepositional n-ary relations
};

// All relations of a sentence, ordered by predicate head index. Bare
// prepositional relations are included (callers filter them from final
// output; they feed n-ary composition).
std::vector<EventRelation> extract_all(const DepGraph& g, const ExtractOptions& opts);

std::vector<EventRelation> extract_binary(const DepGraph& g,
                                          const ExtractOptions& opts = {});
std::vector<EventRelation> extract_unary(const DepGraph& g);

// (a1; P; a2) + (a2; prep; a3) -> (a1; P a2 prep; a3) for every pair where
// the second relation's predicate is a single preposition node.
std::vector<EventRelation> compose_nary(std::span<const EventRelation> binaries);

// Identity on non-passive relations. For a passive participle head: active
// lemma, surface subject -> slot 2, by-phrase agent (if any) -> slot 1.
EventRelation map_passive_to_active(const EventRelation& rel, const DepGraph& g);

// Node classification shared with the tagger.
bool is_verb(const DepNode& n);
bool is_auxiliary(const DepGraph& g, int i);
bool is_preposition(const DepNode& n);
bool is_adjective(const DepNode& n);
bool is_nominal(const DepNode& n);
bool is_passive_participle(const DepGraph& g, int i);

// Surface span of an argument: the head's reachable nominal subtree with
// determiners and punctuation stripped, in token order.
std::string argument_span(const DepGraph& g, int head);

Argument make_argument(const DepGraph& g, int head);

}  // namespace montee
