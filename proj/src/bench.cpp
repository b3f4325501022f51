#include "treematch/bench.hpp"

#include <chrono>

namespace treematch {

namespace {

std::string describe(const MatchSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.matches.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(set.matches[i].id) + "," +
           std::to_string(set.matches[i].distance) + ")";
  }
  return out + "}";
}

bool same_matches(const MatchSet& a, const MatchSet& b) {
  if (a.matches.size() != b.matches.size()) return false;
  for (std::size_t i = 0; i < a.matches.size(); ++i)
    if (a.matches[i].id != b.matches[i].id ||
        a.matches[i].distance != b.matches[i].distance)
      return false;
  return true;
}

}  // namespace

BenchReport run_bench(const TreeDatabase& db, const TreeTrie& trie,
                      std::span<const Tree> queries, const SearchParams& params,
                      int repeat, const LabelPool& pool) {
  params.validate();
  if (queries.empty()) throw std::invalid_argument("no queries");
  if (repeat < 1) throw std::invalid_argument("repeat must be >= 1");

  BenchReport report;
  report.threshold = params.threshold;
  report.query_count = queries.size();
  const double trie_nodes = static_cast<double>(trie.node_count());

  using Clock = std::chrono::steady_clock;
  for (std::size_t qi = 0; qi < queries.size(); ++qi) {
    VertexListSequence x = linearize(queries[qi]);
    report.avg_leaves_per_query += static_cast<double>(x.size());

    SearchResult result;
    double best_ms = 0;
    for (int r = 0; r < repeat; ++r) {
      auto t0 = Clock::now();
      result = approx_search(trie, x, params, pool);
      auto t1 = Clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (r == 0 || ms < best_ms) best_ms = ms;
    }

    MatchSet expected = linear_scan(db, x, params, pool);
    if (!same_matches(result.matches, expected))
      throw BenchCrossCheckError(
          "search/scan mismatch on query " + std::to_string(qi) + ": trie " +
          describe(result.matches) + " vs scan " + describe(expected));

    report.avg_search_ms += best_ms;
    report.avg_trees_found += static_cast<double>(result.matches.size());
    report.avg_visited_fraction +=
        static_cast<double>(result.trace.nodes_visited) / trie_nodes;
  }

  const double n = static_cast<double>(queries.size());
  report.avg_leaves_per_query /= n;
  report.avg_search_ms /= n;
  report.avg_trees_found /= n;
  report.avg_visited_fraction /= n;
  return report;
}

}  // namespace treematch
