#include "treematch/distance.hpp"

#include <algorithm>
#include <stdexcept>

namespace treematch {

CutoffWindow cutoff_window(std::size_t n, std::size_t m, Cost threshold,
                           Cost indel) {
  std::size_t down = static_cast<std::size_t>(threshold / indel);
  std::size_t up = static_cast<std::size_t>((threshold + indel - 1) / indel);
  CutoffWindow w;
  w.lo = n > down ? n - down : 0;
  w.hi = std::min(m, n + up);
  w.empty = w.lo > w.hi;
  return w;
}

DistanceMatrix::DistanceMatrix(const VertexListSequence& query,
                               CostParams costs, const LabelPool& pool)
    : pool_(&pool),
      costs_(costs),
      query_(&query),
      m_(query.size()),
      cells_(m_ + 1),
      cols_(1) {
  costs_.validate();
  for (std::size_t i = 0; i <= m_; ++i)
    cells_[i] = static_cast<Cost>(i) * costs_.indel;
}

void DistanceMatrix::push(std::span<const LabelId> y_list) {
  std::size_t n = cols_;  // the candidate length this column is for
  cells_.resize((cols_ + 1) * (m_ + 1));
  const Cost* prev = cells_.data() + (n - 1) * (m_ + 1);
  Cost* cur = cells_.data() + n * (m_ + 1);
  cur[0] = static_cast<Cost>(n) * costs_.indel;
  for (std::size_t i = 1; i <= m_; ++i) {
    std::span<const LabelId> x_list = (*query_)[i - 1].view();
    // min over every applicable move: drop x_i, drop y_n, and advance both
    // when the lists match outright or differ only at the leaf label.
    Cost best = std::min(cur[i - 1], prev[i]) + costs_.indel;
    switch (classify_lists(x_list, y_list, *pool_)) {
      case PairRelation::equal:
        best = std::min(best, prev[i - 1]);
        break;
      case PairRelation::label_diff:
        best = std::min(best, prev[i - 1] + costs_.change);
        break;
      default:
        break;
    }
    cur[i] = best;
  }
  ++cols_;
}

void DistanceMatrix::pop() {
  if (cols_ <= 1)
    throw std::logic_error("DistanceMatrix::pop: column 0 cannot be popped");
  --cols_;
  cells_.resize(cols_ * (m_ + 1));
}

Cost DistanceMatrix::cutoff(Cost threshold) const {
  CutoffWindow w = cutoff_window(depth(), m_, threshold, costs_.indel);
  if (w.empty) return kInfiniteCost;
  std::span<const Cost> col = column(depth());
  Cost best = col[w.lo];
  for (std::size_t i = w.lo + 1; i <= w.hi; ++i) best = std::min(best, col[i]);
  return best;
}

Cost dist(const VertexListSequence& x, const VertexListSequence& y,
          const CostParams& costs, const LabelPool& pool) {
  DistanceMatrix h(x, costs, pool);
  for (const VertexList& list : y.lists) h.push(list.view());
  return h.current_dist();
}

Cost dist_oracle(const VertexListSequence& x, const VertexListSequence& y,
                 const CostParams& costs, const LabelPool& pool) {
  costs.validate();
  std::size_t m = x.size(), n = y.size();
  std::vector<Cost> table((m + 1) * (n + 1));
  auto cell = [&](std::size_t i, std::size_t j) -> Cost& {
    return table[i * (n + 1) + j];
  };
  for (std::size_t i = 0; i <= m; ++i) cell(i, 0) = static_cast<Cost>(i) * costs.indel;
  for (std::size_t j = 0; j <= n; ++j) cell(0, j) = static_cast<Cost>(j) * costs.indel;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      Cost best = std::min(cell(i - 1, j), cell(i, j - 1)) + costs.indel;
      switch (classify_pair(x[i - 1], y[j - 1], pool)) {
        case PairRelation::equal:
          best = std::min(best, cell(i - 1, j - 1));
          break;
        case PairRelation::label_diff:
          best = std::min(best, cell(i - 1, j - 1) + costs.change);
          break;
        default:
          break;  // substitution not available
      }
      cell(i, j) = best;
    }
  }
  return cell(m, n);
}

}  // namespace treematch
