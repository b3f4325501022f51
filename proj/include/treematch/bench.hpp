#pragma once

#include <span>
#include <string>
#include <vector>

#include "treematch/search.hpp"

namespace treematch {

// Per-(database, threshold) aggregates over a query set. Non-timing fields
// are deterministic functions of the inputs.
struct BenchReport {
  Cost threshold = 0;
  std::size_t query_count = 0;
  double avg_leaves_per_query = 0;
  double avg_search_ms = 0;
  double avg_trees_found = 0;
  double avg_visited_fraction = 0;  // nodes entered / trie nodes
};

// Raised when approx_search and the exhaustive scan disagree on a query;
// carries a diagnostic naming the query and the differing sets.
struct BenchCrossCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Times approx_search per query (best of `repeat` runs on a monotonic
// clock; trie build excluded) and cross-checks every result set against
// linear_scan.
BenchReport run_bench(const TreeDatabase& db, const TreeTrie& trie,
                      std::span<const Tree> queries, const SearchParams& params,
                      int repeat, const LabelPool& pool);

}  // namespace treematch
