#include "treematch/search.hpp"

#include <algorithm>

namespace treematch {

namespace {

void sort_matches(MatchSet& set) {
  std::sort(set.matches.begin(), set.matches.end(),
            [](const Match& a, const Match& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.id < b.id;
            });
}

struct Frame {
  NodeIndex node;
  std::size_t next_edge;
};

}  // namespace

SearchResult approx_search(const TreeTrie& trie, const VertexListSequence& x,
                           const SearchParams& params, const LabelPool& pool) {
  params.validate();
  SearchResult result;
  DistanceMatrix h(x, params.costs, pool);

  auto emit = [&](NodeIndex q) {
    const TrieNode& node = trie.node(q);
    if (node.terminal_ids.empty()) return;
    Cost d = h.current_dist();
    if (d > params.threshold) return;
    for (TreeId id : node.terminal_ids)
      result.matches.matches.push_back(Match{id, d});
  };

  result.trace.nodes_visited = 1;
  emit(trie.root());  // a terminal root only arises in a degenerate database

  std::vector<Frame> stack;
  stack.push_back(Frame{trie.root(), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    const TrieNode& node = trie.node(top.node);
    if (top.next_edge == node.edges.size()) {
      stack.pop_back();
      if (!stack.empty()) {
        h.pop();
        ++result.trace.columns_popped;
      }
      continue;
    }
    const TrieEdge& edge = node.edges[top.next_edge++];
    h.push(trie.edge_label(edge.label));
    ++result.trace.columns_pushed;
    if (h.cutoff(params.threshold) <= params.threshold) {
      ++result.trace.nodes_visited;
      emit(edge.child);
      stack.push_back(Frame{edge.child, 0});
    } else {
      h.pop();
      ++result.trace.columns_popped;
      ++result.trace.branches_pruned;
    }
  }
  sort_matches(result.matches);
  return result;
}

MatchSet linear_scan(const TreeDatabase& db, const VertexListSequence& x,
                     const SearchParams& params, const LabelPool& pool) {
  params.validate();
  MatchSet out;
  for (const TreeRecord& rec : db.records) {
    Cost d = dist(x, linearize(rec.tree), params.costs, pool);
    if (d <= params.threshold) out.matches.push_back(Match{rec.id, d});
  }
  sort_matches(out);
  return out;
}

}  // namespace treematch
