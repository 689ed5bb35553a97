#include "montee/depgraph.hpp"

#include <algorithm>
#include <string>

#include "montee/errors.hpp"

namespace montee {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

// The two CCG supertags indicating counterfactual "had".
const std::string kCfSupertag1 = R"((((S\NP)\(S\NP))/(S[pt]\NP))/NP)";
const std::string kCfSupertag2 = R"(((S/S)/(S[pt]\NP))/NP)";

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

DepGraph::DepGraph(std::vector<DepNode> nodes, std::vector<DepEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const int n = static_cast<int>(nodes_.size());
  out_.resize(nodes_.size());
  in_.resize(nodes_.size());
  for (const auto& e : edges_) {
    if (e.head < 0 || e.head >= n || e.dep < 0 || e.dep >= n) {
      throw DataError("edge endpoint out of range: " + std::to_string(e.head) + " -> " +
                      std::to_string(e.dep));
    }
    out_[static_cast<std::size_t>(e.head)].emplace_back(e.dep, e.slot);
    in_[static_cast<std::size_t>(e.dep)].emplace_back(e.head, e.slot);
  }
  for (auto& adj : out_) {
    std::sort(adj.begin(), adj.end(),
              [](auto a, auto b) { return a.second != b.second ? a.second < b.second
                                                               : a.first < b.first; });
  }
}

std::span<const std::pair<int, int>> DepGraph::out(int head) const {
  return out_[static_cast<std::size_t>(head)];
}

std::span<const std::pair<int, int>> DepGraph::in(int dep) const {
  return in_[static_cast<std::size_t>(dep)];
}

std::vector<int> DepGraph::visit_reachable(int src) const {
  std::vector<bool> visited(nodes_.size(), false);
  std::vector<int> stack{src};
  std::vector<int> result;
  visited[static_cast<std::size_t>(src)] = true;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    result.push_back(cur);
    for (auto [dep, slot] : out(cur)) {
      if (!visited[static_cast<std::size_t>(dep)]) {
        visited[static_cast<std::size_t>(dep)] = true;
        stack.push_back(dep);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool DepGraph::path_between(int src, int dst) const {
  if (src == dst) return true;
  std::vector<bool> visited(nodes_.size(), false);
  std::vector<int> stack{src};
  visited[static_cast<std::size_t>(src)] = true;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (auto [dep, slot] : out(cur)) {
      if (dep == dst) return true;
      if (!visited[static_cast<std::size_t>(dep)]) {
        visited[static_cast<std::size_t>(dep)] = true;
        stack.push_back(dep);
      }
    }
  }
  return false;
}

bool DepGraph::is_cf_had(int n) const {
  const auto& node = nodes_[static_cast<std::size_t>(n)];
  if (node.lemma != "have" || to_lower(node.form) != "had") return false;
  const std::string tag = strip_spaces(node.supertag);
  return tag == kCfSupertag1 || tag == kCfSupertag2;
}

bool DepGraph::check_cf(int n) const {
  const auto& node = nodes_[static_cast<std::size_t>(n)];
  if (is_cf_had(n)) return true;
  if (node.lemma == "if") {
    for (int m : visit_reachable(n)) {
      if (m != n && is_cf_had(m)) return true;
    }
  }
  return false;
}

}  // namespace montee
