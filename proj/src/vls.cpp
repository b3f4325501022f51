#include "treematch/vls.hpp"

#include <algorithm>

namespace treematch {

ListOrder compare_lists(std::span<const LabelId> a, std::span<const LabelId> b,
                        const LabelPool& pool) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = pool.compare(a[i], b[i]);
    if (c < 0) return ListOrder::less;
    if (c > 0) return ListOrder::greater;
  }
  if (a.size() < b.size()) return ListOrder::less;
  if (a.size() > b.size()) return ListOrder::greater;
  return ListOrder::equal;
}

PairRelation classify_lists(std::span<const LabelId> x,
                            std::span<const LabelId> y, const LabelPool& pool) {
  if (x.size() == y.size() && !x.empty()) {
    bool prefix_equal = true;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (x[i] != y[i]) {
        prefix_equal = false;
        break;
      }
    }
    if (prefix_equal) {
      if (x.back() == y.back()) return PairRelation::equal;
      return PairRelation::label_diff;
    }
  }
  switch (compare_lists(x, y, pool)) {
    case ListOrder::less:
      return PairRelation::x_less;
    case ListOrder::greater:
      return PairRelation::x_greater;
    case ListOrder::equal:
      return PairRelation::equal;
  }
  return PairRelation::equal;  // unreachable
}

VertexListSequence VertexListSequence::from_lists(
    std::vector<VertexList> lists, const LabelPool& pool) {
  for (const VertexList& v : lists)
    if (v.vertices.empty())
      throw ValidationError("vertex list must not be empty");
  for (std::size_t i = 1; i < lists.size(); ++i) {
    if (compare_vertex_lists(lists[i - 1], lists[i], pool) != ListOrder::less)
      throw ValidationError("vertex lists not strictly increasing");
    if (lists[i - 1].vertices[0] != lists[i].vertices[0])
      throw ValidationError("vertex lists have differing roots");
  }
  for (std::size_t i = 1; i < lists.size(); ++i) {
    const auto& a = lists[i - 1].vertices;
    const auto& b = lists[i].vertices;
    if (a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin()))
      throw ValidationError("vertex list is a prefix of its successor");
  }
  VertexListSequence s;
  s.lists = std::move(lists);
  return s;
}

namespace {

void linearize_rec(const Tree& t, std::vector<LabelId>& path,
                   std::vector<VertexList>& out) {
  path.push_back(t.label);
  if (t.is_leaf()) {
    out.push_back(VertexList{path});
  } else {
    for (const Tree& child : t.children) linearize_rec(child, path, out);
  }
  path.pop_back();
}

// Builds the subtree for lists[lo, hi) which all share the first `depth`
// labels; lists are strictly increasing, so sibling groups are consecutive.
Tree delinearize_rec(const std::vector<VertexList>& lists, std::size_t lo,
                     std::size_t hi, std::size_t depth, const LabelPool& pool) {
  Tree node;
  node.label = lists[lo].vertices[depth];
  if (lists[lo].size() == depth + 1) {
    // This list ends exactly here; any longer list in the group extends it,
    // which would make the leaf internal.
    if (hi - lo > 1)
      throw ValidationError(
          "inconsistent sequence: list is a prefix of another (leaf/internal "
          "conflict)");
    return node;
  }
  // All remaining lists are longer than depth+1 and strictly ordered, so
  // each child's group is a consecutive run on vertices[depth+1].
  std::size_t i = lo;
  while (i < hi) {
    LabelId child_label = lists[i].vertices[depth + 1];
    std::size_t j = i + 1;
    while (j < hi && lists[j].vertices[depth + 1] == child_label) ++j;
    node.children.push_back(delinearize_rec(lists, i, j, depth + 1, pool));
    i = j;
  }
  return node;
}

}  // namespace

VertexListSequence linearize(const Tree& t) {
  VertexListSequence s;
  std::vector<LabelId> path;
  linearize_rec(t, path, s.lists);
  return s;
}

Tree delinearize(const VertexListSequence& s, const LabelPool& pool) {
  if (s.empty())
    throw ValidationError("cannot delinearize an empty sequence");
  for (const VertexList& v : s.lists)
    if (v.vertices.empty())
      throw ValidationError("vertex list must not be empty");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (compare_vertex_lists(s[i - 1], s[i], pool) != ListOrder::less)
      throw ValidationError("vertex lists not strictly increasing");
    if (s[i - 1].vertices[0] != s[i].vertices[0])
      throw ValidationError("vertex lists have differing roots");
  }
  return delinearize_rec(s.lists, 0, s.size(), 0, pool);
}

std::string format_sequence(const VertexListSequence& s,
                            const LabelPool& pool) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += '(';
    for (std::size_t j = 0; j < s[i].size(); ++j) {
      if (j) out += ',';
      out += pool.text(s[i].vertices[j]);
    }
    out += ')';
  }
  out += ')';
  return out;
}

}  // namespace treematch
