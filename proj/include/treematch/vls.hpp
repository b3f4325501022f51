#pragma once

#include <span>
#include <string>
#include <vector>

#include "treematch/labels.hpp"
#include "treematch/tree.hpp"

namespace treematch {

// Root-to-leaf path of labels; vertices[0] is the root, back() the leaf.
struct VertexList {
  std::vector<LabelId> vertices;

  std::size_t size() const { return vertices.size(); }
  std::span<const LabelId> view() const { return vertices; }
};

enum class ListOrder { less, equal, greater };

// How two vertex lists relate for the distance recurrence. label_diff means
// same length and equal everywhere but the final (leaf) label; it takes
// precedence over the lexicographic outcomes.
enum class PairRelation { equal, label_diff, x_less, x_greater };

// Lexicographic comparison by label order; a proper prefix sorts first.
ListOrder compare_lists(std::span<const LabelId> a, std::span<const LabelId> b,
                        const LabelPool& pool);

PairRelation classify_lists(std::span<const LabelId> x,
                            std::span<const LabelId> y, const LabelPool& pool);

inline ListOrder compare_vertex_lists(const VertexList& a, const VertexList& b,
                                      const LabelPool& pool) {
  return compare_lists(a.view(), b.view(), pool);
}

inline PairRelation classify_pair(const VertexList& x, const VertexList& y,
                                  const LabelPool& pool) {
  return classify_lists(x.view(), y.view(), pool);
}

// A tree's canonical linear form: all of its root-to-leaf vertex lists in
// strictly increasing order. Lists of one valid tree share the root label
// and none is a prefix of another.
struct VertexListSequence {
  std::vector<VertexList> lists;

  std::size_t size() const { return lists.size(); }
  bool empty() const { return lists.empty(); }
  const VertexList& operator[](std::size_t i) const { return lists[i]; }

  // Validates the sequence invariants (strict order, shared root, prefix
  // freedom); throws ValidationError.
  static VertexListSequence from_lists(std::vector<VertexList> lists,
                                       const LabelPool& pool);
};

// One vertex list per leaf, strictly increasing; |lists| == leaf count.
VertexListSequence linearize(const Tree& t);

// The unique canonical tree whose linearization equals s. Throws
// ValidationError on inconsistent input (differing roots, prefix conflicts,
// out-of-order lists).
Tree delinearize(const VertexListSequence& s, const LabelPool& pool);

// Debug/display form, e.g. "((a,b,c),(a,e))".
std::string format_sequence(const VertexListSequence& s, const LabelPool& pool);

}  // namespace treematch
