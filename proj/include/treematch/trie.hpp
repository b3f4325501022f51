#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "treematch/database.hpp"
#include "treematch/vls.hpp"

namespace treematch {

using NodeIndex = std::uint32_t;
using VlistId = std::uint32_t;

// Shared storage for the distinct vertex lists used as edge labels; repeated
// lists across trees are stored once.
class VertexListInterner {
 public:
  VlistId intern(std::span<const LabelId> list);
  std::span<const LabelId> view(VlistId id) const {
    return {labels_.data() + offsets_[id],
            offsets_[id + 1] - offsets_[id]};
  }
  std::size_t size() const { return offsets_.size() - 1; }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<LabelId> labels_;
  std::unordered_map<std::uint64_t, std::vector<VlistId>> index_;
};

struct TrieEdge {
  VlistId label;
  NodeIndex child;
};

struct TrieNode {
  std::vector<TrieEdge> edges;       // strictly sorted by vertex-list order
  std::vector<TreeId> terminal_ids;  // trees whose sequence ends here
};

struct TrieStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t terminal_nodes = 0;
  std::size_t tree_ids = 0;
  std::size_t edge_label_vertices = 0;  // sum of |label| over all edges
  std::size_t max_depth = 0;            // edges on the longest root path
};

// Prefix tree over the vertex list sequences of a database. Edges carry
// whole vertex lists; a terminal node marks the end of at least one tree's
// sequence and may still have outgoing edges. Immutable after build.
class TreeTrie {
 public:
  static TreeTrie build(const TreeDatabase& db, const LabelPool& pool);

  NodeIndex root() const { return 0; }

  // The node reached from q by the edge labeled exactly v, if any.
  std::optional<NodeIndex> delta(NodeIndex q,
                                 std::span<const LabelId> v) const;

  // Ids stored at the node the whole sequence leads to; empty when the path
  // does not exist or ends at a non-terminal node.
  std::vector<TreeId> exact_lookup(const VertexListSequence& x) const;

  const TrieNode& node(NodeIndex q) const;
  std::span<const LabelId> edge_label(VlistId id) const {
    return lists_.view(id);
  }
  std::size_t node_count() const { return nodes_.size(); }

  TrieStats stats() const;

 private:
  const LabelPool* pool_ = nullptr;
  VertexListInterner lists_;
  std::vector<TrieNode> nodes_;
};

}  // namespace treematch
