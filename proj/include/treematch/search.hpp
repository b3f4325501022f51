#pragma once

#include <cstdint>
#include <vector>

#include "treematch/distance.hpp"
#include "treematch/trie.hpp"

namespace treematch {

struct SearchParams {
  Cost threshold = 2;
  CostParams costs;

  void validate() const {
    if (threshold < 0) throw std::invalid_argument("threshold must be >= 0");
    costs.validate();
  }
};

struct Match {
  TreeId id;
  Cost distance;
};

// Retrieved trees for one query, sorted by (distance, id); ids are distinct
// and every distance is <= the threshold.
struct MatchSet {
  std::vector<Match> matches;

  std::size_t size() const { return matches.size(); }
  bool empty() const { return matches.empty(); }
};

struct SearchTrace {
  std::uint64_t nodes_visited = 0;    // nodes entered, root included
  std::uint64_t columns_pushed = 0;
  std::uint64_t columns_popped = 0;
  std::uint64_t branches_pruned = 0;  // pushes rejected by the cut-off
};

struct SearchResult {
  MatchSet matches;
  SearchTrace trace;
};

// Depth-first probe of the trie: each edge taken pushes a matrix column,
// a branch is abandoned as soon as the cut-off distance exceeds the
// threshold, and every terminal node reached is emitted when the full
// distance is within the threshold.
SearchResult approx_search(const TreeTrie& trie, const VertexListSequence& x,
                           const SearchParams& params, const LabelPool& pool);

// Exhaustive baseline: dist against every record, filtered by the threshold.
MatchSet linear_scan(const TreeDatabase& db, const VertexListSequence& x,
                     const SearchParams& params, const LabelPool& pool);

}  // namespace treematch
