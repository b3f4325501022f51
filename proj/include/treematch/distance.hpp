#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "treematch/vls.hpp"

namespace treematch {

using Cost = std::int32_t;

// Sentinel for "no sequence in range"; never produced by a real alignment.
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max() / 4;

// Edit costs: `change` per leaf-label change, `indel` per leaf insertion or
// deletion. `indel` doubles as the window cost M for the cut-off distance.
struct CostParams {
  Cost change = 1;
  Cost indel = 2;

  void validate() const {
    if (change < 0) throw std::invalid_argument("cost-change must be >= 0");
    if (indel <= 0) throw std::invalid_argument("cost-indel must be > 0");
    if (change > 2 * indel)
      throw std::invalid_argument(
          "cost-change must be at most twice cost-indel");
  }
};

// Inclusive row window [lo, hi] the cut-off distance minimizes over when the
// candidate has length n against a query of length m. Query prefixes shorter
// than lo need more than floor(t/indel) insertions, longer than hi more than
// ceil(t/indel) deletions, to reach length n within the threshold.
struct CutoffWindow {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool empty = false;
};

CutoffWindow cutoff_window(std::size_t n, std::size_t m, Cost threshold,
                           Cost indel);

// Minimum total cost of leaf insertions, deletions and leaf label changes
// converting one sequence into the other: equal lists align for free, lists
// differing only at the leaf label align for `change`, and an unmatched
// list on either side costs `indel`. Computed through the incremental
// column matrix below.
Cost dist(const VertexListSequence& x, const VertexListSequence& y,
          const CostParams& costs, const LabelPool& pool);

// Brute-force reference: a plain full-table edit-distance DP over the same
// move set, kept independent of the incremental machinery.
Cost dist_oracle(const VertexListSequence& x, const VertexListSequence& y,
                 const CostParams& costs, const LabelPool& pool);

// The H matrix of the incremental search: column j holds
// H(0..m, j) = dist(X[0..i], Y[0..j]) for the current candidate prefix Y.
// Columns are pushed as the candidate grows and popped on backtracking;
// retained columns stay valid throughout.
class DistanceMatrix {
 public:
  // Borrows the query; it must outlive the matrix.
  DistanceMatrix(const VertexListSequence& query, CostParams costs,
                 const LabelPool& pool);

  // Appends the column for candidate prefix extended by y_n, computed
  // top-down so each cell's upper neighbor is ready when needed.
  void push(std::span<const LabelId> y_list);

  // Discards the last column; column 0 is never popped.
  void pop();

  // Current candidate length n (columns pushed and not popped).
  std::size_t depth() const { return cols_ - 1; }

  std::size_t query_length() const { return m_; }

  // H(m, n): the distance for the full query against the full candidate.
  Cost current_dist() const { return column(depth()).back(); }

  // cutdist: min H(i, n) over the cut-off window rows, kInfiniteCost when
  // the window is empty (candidate already too long to ever get back).
  Cost cutoff(Cost threshold) const;

  std::span<const Cost> column(std::size_t j) const {
    return {cells_.data() + j * (m_ + 1), m_ + 1};
  }

  const CostParams& costs() const { return costs_; }

 private:
  const LabelPool* pool_;
  CostParams costs_;
  const VertexListSequence* query_;
  std::size_t m_;
  std::vector<Cost> cells_;  // cols_ columns of m_+1 cells each
  std::size_t cols_;
};

}  // namespace treematch
