#include "montee/relex.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace montee {

namespace {

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

bool is_particle(const DepNode& n) { return n.pos == "RP"; }
bool is_to(const DepNode& n) { return n.pos == "TO"; }

bool is_punct(const DepNode& n) {
  return !n.pos.empty() && !std::isalnum(static_cast<unsigned char>(n.pos[0]));
}

// Render predicate strings from the node chain. The event head and all
// non-verb nodes render as lemmas; modifier verbs keep their surface form
// ("failed to investigate", not "fail to investigate").
void render_predicate(const DepGraph& g, EventRelation& rel) {
  std::string display;
  std::string lemmas;
  for (std::size_t k = 0; k < rel.pred_nodes.size(); ++k) {
    const DepNode& n = g.node(rel.pred_nodes[k]);
    if (k) {
      display += ' ';
      lemmas += '.';
    }
    display += (is_verb(n) && n.index != rel.head) ? n.form : n.lemma;
    lemmas += n.lemma;
  }
  rel.pred_display = std::move(display);
  rel.pred_lemmas = std::move(lemmas);
}

struct ArgHit {
  int node = -1;
  int slot = 0;
  std::vector<int> via;  // preposition nodes traversed to reach the argument
};

// First nominal underneath a preposition, following nested prepositions.
std::optional<ArgHit> prep_object(const DepGraph& g, int prep, int slot,
                                  std::vector<int> via) {
  via.push_back(prep);
  for (auto [d, s] : g.out(prep)) {
    if (is_nominal(g.node(d))) return ArgHit{d, slot, via};
  }
  for (auto [d, s] : g.out(prep)) {
    if (is_preposition(g.node(d))) {
      if (auto hit = prep_object(g, d, slot, via)) return hit;
    }
  }
  return std::nullopt;
}

struct VerbArgs {
  std::vector<ArgHit> hits;       // nominal arguments, in slot order
  std::vector<int> particles;     // verb particles, in slot order
  int to_complement = -1;         // verb reached via a TO node
  int to_node = -1;
};

VerbArgs collect_args(const DepGraph& g, int v) {
  VerbArgs out;
  for (auto [d, s] : g.out(v)) {
    const DepNode& dn = g.node(d);
    if (is_nominal(dn)) {
      out.hits.push_back({d, s, {}});
    } else if (is_preposition(dn)) {
      if (auto hit = prep_object(g, d, s, {})) out.hits.push_back(*hit);
    } else if (is_particle(dn)) {
      out.particles.push_back(d);
    } else if (is_to(dn) && out.to_complement < 0) {
      for (auto [w, ws] : g.out(d)) {
        if (is_verb(g.node(w)) && !is_auxiliary(g, w)) {
          out.to_complement = w;
          out.to_node = d;
          break;
        }
      }
    }
  }
  return out;
}

const ArgHit* find_subject(const VerbArgs& args) {
  const ArgHit* subject = nullptr;
  for (const auto& h : args.hits) {
    if (!h.via.empty()) continue;
    if (!subject || h.slot < subject->slot) subject = &h;
  }
  return subject;
}

EventRelation make_relation(const DepGraph& g, std::vector<int> chain, int head,
                            std::vector<Argument> args, std::vector<int> slots,
                            RelKind kind) {
  EventRelation rel;
  rel.pred_nodes = std::move(chain);
  rel.head = head;
  rel.args = std::move(args);
  rel.slots = std::move(slots);
  rel.kind = kind;
  render_predicate(g, rel);
  return rel;
}

class Extractor {
 public:
  Extractor(const DepGraph& g, const ExtractOptions& opts) : g_(g), opts_(opts) {}

  std::vector<EventRelation> run() {
    find_suppressed();
    for (const auto& n : g_.nodes()) {
      if (is_verb(n) && !is_auxiliary(g_, n.index) && !suppressed_.count(n.index)) {
        handle_verb(n.index);
      } else if (is_preposition(n) && !governed_by_predicate(n.index)) {
        handle_bare_prep(n.index);
      }
    }
    if (opts_.nary) {
      auto composed = compose_nary(relations_);
      for (auto& r : composed) relations_.push_back(std::move(r));
    }
    std::stable_sort(relations_.begin(), relations_.end(),
                     [](const EventRelation& a, const EventRelation& b) {
                       if (a.head != b.head) return a.head < b.head;
                       if (a.is_stripped_variant != b.is_stripped_variant)
                         return b.is_stripped_variant;
                       if (a.kind != b.kind) return a.kind < b.kind;
                       return a.canonical() < b.canonical();
                     });
    return std::move(relations_);
  }

 private:
  // Verbs that are TO-complements of a modifier verb surface only inside the
  // modifier relation (and its stripped variant), never standalone.
  void find_suppressed() {
    for (const auto& n : g_.nodes()) {
      if (!is_verb(n) || is_auxiliary(g_, n.index)) continue;
      auto args = collect_args(g_, n.index);
      if (args.to_complement >= 0) suppressed_.insert(args.to_complement);
    }
  }

  bool governed_by_predicate(int i) const {
    for (auto [h, s] : g_.in(i)) {
      const DepNode& hn = g_.node(h);
      if (is_verb(hn) || is_adjective(hn) || is_preposition(hn)) return true;
    }
    return false;
  }

  void emit(EventRelation rel, const std::vector<int>& modifier_prefix) {
    rel = map_passive_to_active(rel, g_);
    if (opts_.strip_modifiers && !modifier_prefix.empty()) {
      EventRelation variant = rel;
      std::vector<int> chain;
      for (int n : rel.pred_nodes) {
        if (std::find(modifier_prefix.begin(), modifier_prefix.end(), n) ==
            modifier_prefix.end()) {
          chain.push_back(n);
        }
      }
      variant.pred_nodes = std::move(chain);
      variant.is_stripped_variant = true;
      render_predicate(g_, variant);
      rel.stripped = std::make_shared<EventRelation>(variant);
      relations_.push_back(rel);
      relations_.push_back(std::move(variant));
      return;
    }
    relations_.push_back(std::move(rel));
  }

  void handle_verb(int v) {
    const DepNode& vn = g_.node(v);
    auto args = collect_args(g_, v);

    if (vn.lemma == "be") {
      if (handle_copular(v, args)) return;
    }

    if (args.to_complement >= 0) {
      // Modifier construction: the event is the embedded verb, the finite
      // verb and "to" stay in the predicate ("failed to investigate").
      handle_event(args.to_complement, {v, args.to_node}, find_subject(args));
      return;
    }
    handle_event(v, {}, nullptr);
  }

  void handle_event(int e, std::vector<int> modifier_prefix,
                    const ArgHit* fallback_subject) {
    auto args = collect_args(g_, e);
    const ArgHit* subject = find_subject(args);
    if (!subject) subject = fallback_subject;
    if (!subject) return;

    Argument subj_arg = make_argument(g_, subject->node);

    bool emitted = false;
    for (const auto& h : args.hits) {
      if (&h == subject || (h.via.empty() && h.node == subject->node)) continue;
      std::vector<int> chain = modifier_prefix;
      chain.push_back(e);
      for (int p : args.particles) chain.push_back(p);
      for (int p : h.via) chain.push_back(p);
      emit(make_relation(g_, std::move(chain), e,
                         {subj_arg, make_argument(g_, h.node)},
                         {subject->slot, h.slot}, RelKind::Binary),
           modifier_prefix);
      emitted = true;
    }
    if (!emitted) {
      std::vector<int> chain = modifier_prefix;
      chain.push_back(e);
      for (int p : args.particles) chain.push_back(p);
      emit(make_relation(g_, std::move(chain), e, {subj_arg}, {subject->slot},
                         RelKind::Unary),
           modifier_prefix);
    }
  }

  // Copular "be": predicative adjectives and nominals give unary relations
  // ("be willing", "be climate activist"); a prepositional complement gives
  // a binary via the usual chain extension ("be in"). Returns false when the
  // generic verb path should take over.
  bool handle_copular(int v, const VerbArgs& args) {
    const ArgHit* subject = find_subject(args);
    if (!subject) return false;

    int complement = -1;
    for (auto [d, s] : g_.out(v)) {
      if (d == subject->node && s == subject->slot) continue;
      const DepNode& dn = g_.node(d);
      if (is_adjective(dn) || (is_nominal(dn) && d != subject->node)) {
        complement = d;
        break;
      }
    }
    if (complement < 0) return false;

    const DepNode& cn = g_.node(complement);
    if (is_adjective(cn)) {
      // "ready to talk": the adjective is a trigger path, not an event; the
      // embedded verb is extracted on its own.
      auto comp_args = collect_args(g_, complement);
      if (comp_args.to_complement >= 0) return true;
      emit(make_relation(g_, {v, complement}, v, {make_argument(g_, subject->node)},
                         {subject->slot}, RelKind::Unary),
           {});
      return true;
    }

    // Predicative nominal: "be" + the complement's compound chain.
    std::vector<int> chain{v};
    std::vector<int> compound;
    for (int m : g_.visit_reachable(complement)) {
      const DepNode& mn = g_.node(m);
      if (is_nominal(mn) || is_adjective(mn)) compound.push_back(m);
    }
    std::sort(compound.begin(), compound.end());
    for (int m : compound) chain.push_back(m);
    emit(make_relation(g_, std::move(chain), v, {make_argument(g_, subject->node)},
                       {subject->slot}, RelKind::Unary),
         {});
    return true;
  }

  void handle_bare_prep(int p) {
    std::vector<ArgHit> hits;
    for (auto [d, s] : g_.out(p)) {
      if (is_nominal(g_.node(d))) hits.push_back({d, s, {}});
    }
    if (hits.size() < 2) return;
    std::sort(hits.begin(), hits.end(),
              [](const ArgHit& a, const ArgHit& b) { return a.slot < b.slot; });
    EventRelation rel = make_relation(
        g_, {p}, p, {make_argument(g_, hits[0].node), make_argument(g_, hits[1].node)},
        {hits[0].slot, hits[1].slot}, RelKind::Binary);
    rel.bare_preposition = true;
    relations_.push_back(std::move(rel));
  }

  const DepGraph& g_;
  const ExtractOptions& opts_;
  std::set<int> suppressed_;
  std::vector<EventRelation> relations_;
};

}  // namespace

bool is_verb(const DepNode& n) { return starts_with(n.pos, "VB"); }

bool is_auxiliary(const DepGraph& g, int i) {
  const DepNode& n = g.node(i);
  if (n.pos == "MD") return true;
  if (n.lemma != "be" && n.lemma != "have" && n.lemma != "do") return false;
  for (auto [d, s] : g.out(i)) {
    if (is_verb(g.node(d))) return true;
  }
  return false;
}

bool is_preposition(const DepNode& n) { return n.pos == "IN"; }
bool is_adjective(const DepNode& n) { return starts_with(n.pos, "JJ"); }

bool is_nominal(const DepNode& n) {
  return starts_with(n.pos, "NN") || n.pos == "PRP" || n.pos == "CD";
}

bool is_passive_participle(const DepGraph& g, int i) {
  if (g.node(i).pos != "VBN") return false;
  for (auto [h, s] : g.in(i)) {
    if (g.node(h).lemma == "be" && is_auxiliary(g, h)) return true;
  }
  return false;
}

std::string argument_span(const DepGraph& g, int head) {
  std::vector<int> keep;
  for (int m : g.visit_reachable(head)) {
    const DepNode& n = g.node(m);
    if (m == head || is_nominal(n) || is_adjective(n)) keep.push_back(m);
  }
  std::sort(keep.begin(), keep.end());
  std::string out;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (k) out += ' ';
    out += g.node(keep[k]).form;
  }
  return out;
}

Argument make_argument(const DepGraph& g, int head) {
  Argument arg;
  arg.head = head;
  arg.text = argument_span(g, head);
  const auto& entity = g.node(head).entity;
  arg.kind = entity ? ArgKind::Named : ArgKind::General;
  if (entity) arg.figer_type = entity->figer_type;
  return arg;
}

EventRelation map_passive_to_active(const EventRelation& rel, const DepGraph& g) {
  if (rel.head < 0 || !is_passive_participle(g, rel.head)) return rel;
  if (rel.args.empty()) return rel;

  EventRelation out = rel;
  // Drop the "by" marker from the predicate chain, if present.
  int by_node = -1;
  std::vector<int> chain;
  for (int n : rel.pred_nodes) {
    const DepNode& node = g.node(n);
    if (node.lemma == "by" && is_preposition(node)) {
      by_node = n;
    } else {
      chain.push_back(n);
    }
  }
  out.pred_nodes = std::move(chain);

  if (by_node >= 0 && rel.args.size() == 2) {
    // Agented passive: by-phrase argument becomes the subject.
    out.args = {rel.args[1], rel.args[0]};
    out.slots = {1, 2};
    out.kind = RelKind::Binary;
  } else {
    // Agentless passive: the surface subject is the patient.
    out.args = rel.args;
    out.slots = rel.slots;
    out.slots[0] = 2;
    out.kind = rel.args.size() == 1 ? RelKind::Unary : rel.kind;
  }
  render_predicate(g, out);
  return out;
}

std::vector<EventRelation> extract_all(const DepGraph& g, const ExtractOptions& opts) {
  return Extractor(g, opts).run();
}

std::vector<EventRelation> extract_binary(const DepGraph& g, const ExtractOptions& opts) {
  std::vector<EventRelation> out;
  for (auto& rel : extract_all(g, opts)) {
    if (rel.kind == RelKind::Binary && !rel.bare_preposition && !rel.is_stripped_variant) {
      out.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<EventRelation> extract_unary(const DepGraph& g) {
  std::vector<EventRelation> out;
  for (auto& rel : extract_all(g, {})) {
    if (rel.kind == RelKind::Unary && !rel.is_stripped_variant) out.push_back(std::move(rel));
  }
  return out;
}

std::vector<EventRelation> compose_nary(std::span<const EventRelation> binaries) {
  std::vector<EventRelation> out;
  for (const auto& first : binaries) {
    if (first.kind != RelKind::Binary || first.bare_preposition ||
        first.is_stripped_variant || first.args.size() != 2) {
      continue;
    }
    for (const auto& second : binaries) {
      if (!second.bare_preposition || second.args.size() != 2) continue;
      if (first.args[1].head != second.args[0].head) continue;
      EventRelation composed;
      composed.pred_nodes = first.pred_nodes;
      composed.pred_nodes.insert(composed.pred_nodes.end(), second.pred_nodes.begin(),
                                 second.pred_nodes.end());
      composed.head = first.head;
      composed.kind = RelKind::Nary;
      composed.args = {first.args[0], second.args[1]};
      composed.slots = {first.slots[0], second.slots[1]};
      composed.pred_display =
          first.pred_display + " " + first.args[1].text + " " + second.pred_display;
      composed.pred_lemmas = first.pred_lemmas + "." + second.pred_lemmas;
      out.push_back(std::move(composed));
    }
  }
  return out;
}

std::string EventRelation::canonical() const {
  std::string out = pred_lemmas;
  for (int s : slots) {
    out += '.';
    out += std::to_string(s);
  }
  return out;
}

}  // namespace montee
