#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace montee {

struct EntityRef {
  std::string id;
  std::string figer_type;  // opaque FIGER-style path, e.g. "person/politician"
};

struct DepNode {
  int index = 0;
  std::string form;
  std::string lemma;  // lowercase
  std::string pos;
  std::string supertag;
  std::optional<EntityRef> entity;
};

struct DepEdge {
  int head = 0;
  int dep = 0;
  int slot = 0;  // positive CCG argument slot
};

// Per-sentence CCG dependency graph. Not a tree: reentrancies and cycles
// are allowed. Immutable after construction; all queries are pure.
class DepGraph {
 public:
  DepGraph() = default;
  DepGraph(std::vector<DepNode> nodes, std::vector<DepEdge> edges);

  std::size_t size() const { return nodes_.size(); }
  const DepNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const std::vector<DepNode>& nodes() const { return nodes_; }
  const std::vector<DepEdge>& edges() const { return edges_; }

  // Outgoing (dependent, slot) pairs of a head, in slot order.
  std::span<const std::pair<int, int>> out(int head) const;
  // Incoming (head, slot) pairs of a dependent.
  std::span<const std::pair<int, int>> in(int dep) const;

  // Forward reachability head -> dependent; reflexively true for src == dst.
  bool path_between(int src, int dst) const;

  // Full forward-reachable set including src; terminates on cycles.
  std::vector<int> visit_reachable(int src) const;

  // Counterfactual detection: "had" carrying one of the two indicative CCG
  // supertags, or "if" governing such a "had".
  bool check_cf(int n) const;

 private:
  bool is_cf_had(int n) const;

  std::vector<DepNode> nodes_;
  std::vector<DepEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> out_;
  std::vector<std::vector<std::pair<int, int>>> in_;
};

}  // namespace montee
