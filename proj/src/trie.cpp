#include "treematch/trie.hpp"

#include <algorithm>
#include <stdexcept>

namespace treematch {

namespace {

std::uint64_t hash_list(std::span<const LabelId> list) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (LabelId id : list) {
    h ^= id + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

VlistId VertexListInterner::intern(std::span<const LabelId> list) {
  std::uint64_t h = hash_list(list);
  auto& bucket = index_[h];
  for (VlistId id : bucket) {
    std::span<const LabelId> stored = view(id);
    if (stored.size() == list.size() &&
        std::equal(stored.begin(), stored.end(), list.begin()))
      return id;
  }
  labels_.insert(labels_.end(), list.begin(), list.end());
  offsets_.push_back(labels_.size());
  VlistId id = static_cast<VlistId>(offsets_.size() - 2);
  bucket.push_back(id);
  return id;
}

TreeTrie TreeTrie::build(const TreeDatabase& db, const LabelPool& pool) {
  TreeTrie trie;
  trie.pool_ = &pool;
  trie.nodes_.emplace_back();  // root
  for (const TreeRecord& rec : db.records) {
    VertexListSequence seq = linearize(rec.tree);
    NodeIndex at = 0;
    for (const VertexList& list : seq.lists) {
      VlistId label = trie.lists_.intern(list.view());
      std::vector<TrieEdge>& edges = trie.nodes_[at].edges;
      auto it = std::lower_bound(
          edges.begin(), edges.end(), label,
          [&trie, &pool](const TrieEdge& e, VlistId l) {
            return compare_lists(trie.lists_.view(e.label),
                                 trie.lists_.view(l), pool) == ListOrder::less;
          });
      if (it != edges.end() && it->label == label) {
        at = it->child;
      } else {
        NodeIndex child = static_cast<NodeIndex>(trie.nodes_.size());
        std::size_t slot = static_cast<std::size_t>(it - edges.begin());
        edges.insert(edges.begin() + slot, TrieEdge{label, child});
        trie.nodes_.emplace_back();
        at = child;
      }
    }
    trie.nodes_[at].terminal_ids.push_back(rec.id);
  }
  return trie;
}

std::optional<NodeIndex> TreeTrie::delta(NodeIndex q,
                                         std::span<const LabelId> v) const {
  const std::vector<TrieEdge>& edges = node(q).edges;
  auto it = std::lower_bound(
      edges.begin(), edges.end(), v,
      [this](const TrieEdge& e, std::span<const LabelId> l) {
        return compare_lists(lists_.view(e.label), l, *pool_) ==
               ListOrder::less;
      });
  if (it == edges.end()) return std::nullopt;
  std::span<const LabelId> stored = lists_.view(it->label);
  if (stored.size() != v.size() ||
      !std::equal(stored.begin(), stored.end(), v.begin()))
    return std::nullopt;
  return it->child;
}

std::vector<TreeId> TreeTrie::exact_lookup(const VertexListSequence& x) const {
  NodeIndex at = 0;
  for (const VertexList& list : x.lists) {
    std::optional<NodeIndex> next = delta(at, list.view());
    if (!next) return {};
    at = *next;
  }
  return nodes_[at].terminal_ids;
}

const TrieNode& TreeTrie::node(NodeIndex q) const {
  if (q >= nodes_.size())
    throw std::out_of_range("TreeTrie: invalid node index");
  return nodes_[q];
}

TrieStats TreeTrie::stats() const {
  TrieStats s;
  s.nodes = nodes_.size();
  std::vector<std::size_t> depth(nodes_.size(), 0);
  std::vector<NodeIndex> stack{0};
  while (!stack.empty()) {
    NodeIndex q = stack.back();
    stack.pop_back();
    const TrieNode& n = nodes_[q];
    s.edges += n.edges.size();
    if (!n.terminal_ids.empty()) {
      ++s.terminal_nodes;
      s.tree_ids += n.terminal_ids.size();
    }
    for (const TrieEdge& e : n.edges) {
      s.edge_label_vertices += lists_.view(e.label).size();
      depth[e.child] = depth[q] + 1;
      s.max_depth = std::max(s.max_depth, depth[e.child]);
      stack.push_back(e.child);
    }
  }
  return s;
}

}  // namespace treematch
